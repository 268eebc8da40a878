// Generates the bundled 256x256 grayscale test set: a stripe-patch texture,
// a smooth portrait-like scene, and a hard-edged resolution chart. Output is
// deterministic (fixed seed, Box-Muller noise) so the checked-in PGMs can be
// regenerated bit-exactly.
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include "hz/image.hpp"
#include "hz/pgm_io.hpp"

namespace {

constexpr int kN = 256;
constexpr double kPi = std::numbers::pi;

double gauss(std::mt19937& rng) {
  double u1 = (static_cast<double>(rng()) + 1.0) / 4294967296.0;
  double u2 = static_cast<double>(rng()) / 4294967296.0;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

void clip(hz::ImagePlane& img) {
  for (double& v : img.px) v = std::min(255.0, std::max(0.0, v));
}

hz::ImagePlane make_texture() {
  hz::ImagePlane img(kN, kN);
  std::mt19937 rng(7);
  const double stripes[5][6] = {{0.7, 0.25, 28, 10, 45, 0.012},
                                {0.25, 0.35, 12, 26, 40, 0.02},
                                {0.62, 0.72, 20, 20, 42, 0.015},
                                {0.85, 0.6, 8, 30, 38, 0.01},
                                {0.4, 0.85, 30, 6, 35, 0.013}};
  const double blobs[3][4] = {{0.2, 0.2, 50, 0.05}, {0.8, 0.85, -45, 0.04}, {0.5, 0.5, 35, 0.09}};
  for (int i = 0; i < kN; ++i) {
    double y = static_cast<double>(i) / kN;
    for (int j = 0; j < kN; ++j) {
      double x = static_cast<double>(j) / kN;
      double v = 110.0 + 60.0 * std::sin(2.0 * kPi * (0.7 * x + 0.15 * y)) *
                             std::exp(-((x - 0.3) * (x - 0.3) + (y - 0.7) * (y - 0.7)) * 3.0);
      for (const double* s : stripes) {
        double d2 = (x - s[0]) * (x - s[0]) + (y - s[1]) * (y - s[1]);
        v += s[4] * std::sin(2.0 * kPi * (s[2] * x + s[3] * y)) * std::exp(-d2 / (2.0 * s[5]));
      }
      for (const double* b : blobs) {
        double d2 = (x - b[0]) * (x - b[0]) + (y - b[1]) * (y - b[1]);
        v += b[2] * std::exp(-d2 / (2.0 * b[3]));
      }
      img.at(i, j) = v;
    }
  }
  for (double& v : img.px) v += 2.0 * gauss(rng);
  clip(img);
  return img;
}

hz::ImagePlane make_portrait() {
  hz::ImagePlane img(kN, kN);
  std::mt19937 rng(11);
  for (int i = 0; i < kN; ++i) {
    double y = static_cast<double>(i) / kN;
    for (int j = 0; j < kN; ++j) {
      double x = static_cast<double>(j) / kN;
      double dx = x - 0.5;
      double v = 90.0 + 70.0 * std::exp(-(dx * dx / 0.10 + (y - 0.45) * (y - 0.45) / 0.14));
      v -= 45.0 * std::exp(-(dx * dx / 0.018 + (y - 0.27) * (y - 0.27) / 0.004));
      v -= 38.0 * std::exp(-((x - 0.40) * (x - 0.40) + (y - 0.42) * (y - 0.42)) / 0.0009);
      v -= 38.0 * std::exp(-((x - 0.60) * (x - 0.60) + (y - 0.42) * (y - 0.42)) / 0.0009);
      v += 12.0 * std::exp(-(dx * dx / 0.0009 + (y - 0.50) * (y - 0.50) / 0.003));
      v -= 30.0 * std::exp(-(dx * dx / 0.003 + (y - 0.60) * (y - 0.60) / 0.0005));
      v += 35.0 * std::exp(-(y - 0.92) * (y - 0.92) / 0.01);
      v -= 60.0 * (dx * dx + (y - 0.5) * (y - 0.5));
      v += 20.0 * std::sin(kPi * x);
      img.at(i, j) = v;
    }
  }
  for (double& v : img.px) v += 1.0 * gauss(rng);
  clip(img);
  return img;
}

hz::ImagePlane make_chart() {
  hz::ImagePlane img(kN, kN, 235.0);
  // stripe groups, pitch 1..5
  for (int b = 0; b < 5; ++b) {
    int pitch = b + 1;
    for (int i = 8; i < 120; ++i)
      for (int j = 12 + 22 * b; j < 12 + 22 * b + 16; ++j)
        img.at(i, j) = ((j / pitch) % 2 != 0) ? 30.0 : 235.0;
    for (int i = 136 + 22 * b; i < 136 + 22 * b + 16 && i < 248; ++i)
      for (int j = 8; j < 120; ++j)
        img.at(i, j) = ((i / pitch) % 2 != 0) ? 30.0 : 235.0;
  }
  // checkerboards, pitch 1/2/4
  const int pitches[3] = {1, 2, 4};
  for (int band = 0; band < 3; ++band) {
    int pitch = pitches[band];
    for (int i = 8 + 38 * band; i < 8 + 38 * band + 32; ++i)
      for (int j = 136; j < 248; ++j)
        img.at(i, j) = ((i / pitch + j / pitch) % 2 != 0) ? 20.0 : 240.0;
  }
  // concentric rings and a diagonal edge
  for (int i = 136; i < 248; ++i) {
    for (int j = 136; j < 248; ++j) {
      double r = std::hypot(i - 192.0, j - 192.0);
      img.at(i, j) = (std::sin(2.0 * kPi * r / 9.0) > 0.0) ? 225.0 : 35.0;
      if (j - 136 > 2 * (i - 136)) img.at(i, j) = 128.0;
    }
  }
  // frame
  for (int t = 0; t < kN; ++t) {
    img.at(0, t) = img.at(1, t) = img.at(kN - 1, t) = img.at(kN - 2, t) = 0.0;
    img.at(t, 0) = img.at(t, 1) = img.at(t, kN - 1) = img.at(t, kN - 2) = 0.0;
  }
  return img;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  try {
    hz::save_pgm(dir + "/texture.pgm", make_texture());
    hz::save_pgm(dir + "/portrait.pgm", make_portrait());
    hz::save_pgm(dir + "/chart.pgm", make_chart());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cout << "wrote " << dir << "/{texture,portrait,chart}.pgm\n";
  return 0;
}
