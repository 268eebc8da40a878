#include <cmath>
#include <random>

#include "doctest.h"
#include "hz/zoom.hpp"

using namespace hz;

namespace {

ImagePlane random_image(int h, int w, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  ImagePlane img(h, w);
  for (double& v : img.px) v = u(rng);
  return img;
}

}  // namespace

TEST_CASE("low-pass taps: normalization, symmetry, response") {
  for (int len : {3, 9, 13}) {
    auto t = lp_taps(len);
    REQUIRE(static_cast<int>(t.size()) == len);
    double sum = 0.0;
    for (double v : t) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    const int c = (len - 1) / 2;
    for (int i = 0; i < len; ++i) CHECK(t[i] == doctest::Approx(t[len - 1 - i]).epsilon(1e-14));
    for (int i = 0; i < len; ++i) CHECK(t[c] >= t[i]);
  }
  // Half-band behavior: unit DC, ~0.5 at quarter band, strong stopband end.
  auto t = lp_taps(13);
  auto response = [&](double w) {
    double re = 0.0;
    for (int m = -6; m <= 6; ++m) re += t[m + 6] * std::cos(w * m);
    return re;
  };
  CHECK(response(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(response(3.14159265358979323846 / 2) - 0.5) < 0.05);
  CHECK(std::abs(response(3.14159265358979323846)) < 0.05);
  CHECK_THROWS(lp_taps(4));
  CHECK_THROWS(lp_taps(1));
}

TEST_CASE("decimation: shape, constants, ramps") {
  ImagePlane c(10, 15, 42.0);
  ImagePlane dc = decimate2x(c);
  REQUIRE(dc.h == 5);
  REQUIRE(dc.w == 8);  // ceil(15/2)
  for (double v : dc.px) CHECK(v == doctest::Approx(42.0).epsilon(1e-12));

  const int n = 40;
  ImagePlane ramp(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ramp.at(i, j) = 3.0 * i;
  ImagePlane dr = decimate2x(ramp);
  // The prefilter preserves ramps away from borders; kept samples sit at 2i.
  for (int i = 4; i < dr.h - 4; ++i)
    for (int j = 0; j < dr.w; ++j) CHECK(dr.at(i, j) == doctest::Approx(6.0 * i).epsilon(1e-10));

  ImagePlane tiny(3, 10, 1.0);
  CHECK_THROWS(decimate2x(tiny));
}

TEST_CASE("even-even zoom outputs copy the source bitwise") {
  ImagePlane img = random_image(16, 11, 7);
  ZoomKernelSet ks = build_zoom_set(5, {3, 3}, DerivMode::FIR5);
  ImagePlane z = zoom2x(img, ks, ZoomPath::Fused);
  REQUIRE(z.h == 32);
  REQUIRE(z.w == 22);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 11; ++j) CHECK(z.at(2 * i, 2 * j) == img.at(i, j));
}

TEST_CASE("constant images zoom to the same constant") {
  ImagePlane img(12, 12, 87.5);
  for (DerivMode mode : {DerivMode::FIR5, DerivMode::IIR}) {
    ZoomKernelSet ks = build_zoom_set(5, {3, 3}, mode);
    ImagePlane z = zoom2x(img, ks, mode == DerivMode::IIR ? ZoomPath::Channels : ZoomPath::Fused);
    for (double v : z.px) CHECK(v == doctest::Approx(87.5).epsilon(1e-12));
  }
}

TEST_CASE("linear ramps interpolate to half-sample values") {
  // The widest fused kernel (FIR7) reaches six source samples, so the mirror
  // crease at the border is invisible from an output margin of twelve.
  const int n = 24;
  ImagePlane img(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) img.at(i, j) = 2.0 * j + 30.0;
  for (DerivMode mode : {DerivMode::FIR3, DerivMode::FIR7, DerivMode::IIR}) {
    ZoomKernelSet ks = build_zoom_set(5, {3, 3}, mode);
    ImagePlane z =
        zoom2x(img, ks, mode == DerivMode::IIR ? ZoomPath::Channels : ZoomPath::Fused);
    for (int i = 12; i < 2 * n - 12; ++i)
      for (int j = 12; j < 2 * n - 12; ++j)
        CHECK(std::abs(z.at(i, j) - (j + 30.0)) <= 1e-10);
  }
}

TEST_CASE("fused and channel paths agree everywhere, borders included") {
  ImagePlane img = random_image(20, 17, 13);
  for (DerivMode mode : {DerivMode::FIR3, DerivMode::FIR5, DerivMode::FIR7}) {
    ZoomKernelSet ks = build_zoom_set(5, {3, 3}, mode);
    ImagePlane a = zoom2x(img, ks, ZoomPath::Fused);
    ImagePlane b = zoom2x(img, ks, ZoomPath::Channels);
    double worst = 0.0;
    for (size_t t = 0; t < a.px.size(); ++t) worst = std::max(worst, std::abs(a.px[t] - b.px[t]));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("caller-supplied analytic stacks reproduce polynomials") {
  const int n = 20;
  auto f = [](double x, double y) { return x * x + y * y - x * y; };
  ImagePlane img(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) img.at(i, j) = f(i, j);
  DerivativeStack stack;
  stack.channels = reverse_lex_enumerate({2, 2});
  stack.planes.assign(4, ImagePlane(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      stack.planes[0].at(i, j) = f(i, j);
      stack.planes[1].at(i, j) = 2.0 * j - i;   // d/dj
      stack.planes[2].at(i, j) = 2.0 * i - j;   // d/di
      stack.planes[3].at(i, j) = -1.0;          // d2/didj
    }
  ZoomKernelSet ks = build_zoom_set(5, {2, 2}, DerivMode::Exact);
  ImagePlane z = zoom2x_with_stack(stack, ks);
  for (int i = 8; i < 2 * n - 8; ++i)
    for (int j = 8; j < 2 * n - 8; ++j)
      CHECK(z.at(i, j) == doctest::Approx(f(i / 2.0, j / 2.0)).epsilon(1e-10));
}

TEST_CASE("three-plane zoom with impulses replicates pixels") {
  ImagePlane img = random_image(6, 5, 3);
  PlaneKernel imp = PlaneKernel::impulse();
  ImagePlane z = zoom2x_planes(img, img, imp, imp, imp);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(z.at(2 * i, 2 * j) == img.at(i, j));
      CHECK(z.at(2 * i, 2 * j + 1) == img.at(i, j));
      CHECK(z.at(2 * i + 1, 2 * j) == img.at(i, j));
      CHECK(z.at(2 * i + 1, 2 * j + 1) == img.at(i, j));
    }
}

TEST_CASE("fused path requires fused planes") {
  ImagePlane img = random_image(12, 12, 4);
  ZoomKernelSet iir = build_zoom_set(5, {3, 3}, DerivMode::IIR);
  CHECK_THROWS(zoom2x(img, iir, ZoomPath::Fused));
  CHECK_NOTHROW(zoom2x(img, iir, ZoomPath::Channels));
}

TEST_CASE("crop keeps the top-left corner") {
  ImagePlane img = random_image(8, 9, 99);
  ImagePlane c = crop(img, 5, 4);
  REQUIRE(c.h == 5);
  REQUIRE(c.w == 4);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c.at(i, j) == img.at(i, j));
  CHECK_THROWS(crop(img, 9, 4));
}
