#include "hz/baseline.hpp"

#include <cmath>
#include <stdexcept>

#include "hz/compact.hpp"
#include "hz/threads.hpp"
#include "hz/zoom.hpp"

namespace hz {

double keys_cubic(double t) {
  double u = std::fabs(t);
  if (u < 1.0) return (1.5 * u - 2.5) * u * u + 1.0;
  if (u < 2.0) return ((-0.5 * u + 2.5) * u - 4.0) * u + 2.0;
  return 0.0;
}

double bspline3_generator(double t) {
  double u = std::fabs(t);
  if (u < 1.0) return 2.0 / 3.0 - u * u + u * u * u / 2.0;
  if (u < 2.0) {
    double v = 2.0 - u;
    return v * v * v / 6.0;
  }
  return 0.0;
}

AxisWeights baseline_axis_weights(const std::string& name, double frac) {
  if (!(frac >= 0.0 && frac < 1.0)) throw std::invalid_argument("offset must be in [0, 1)");
  if (name == "nearest") {
    // Round half up: the right neighbour wins the tie.
    if (frac < 0.5) return {{1.0, 0.0}, 0};
    return {{0.0, 1.0}, 0};
  }
  if (name == "bilinear") return {{1.0 - frac, frac}, 0};
  if (name == "bicubic") {
    return {{keys_cubic(1.0 + frac), keys_cubic(frac), keys_cubic(1.0 - frac),
             keys_cubic(2.0 - frac)},
            1};
  }
  if (name == "bspline3") {
    return {{bspline3_generator(1.0 + frac), bspline3_generator(frac),
             bspline3_generator(1.0 - frac), bspline3_generator(2.0 - frac)},
            1};
  }
  throw std::invalid_argument("unknown baseline method: " + name);
}

BaselineKernel build_baseline(const std::string& name) {
  BaselineKernel k;
  k.name = name;
  k.prefilter = (name == "bspline3");
  AxisWeights i0 = baseline_axis_weights(name, 0.0);
  AxisWeights i5 = baseline_axis_weights(name, 0.5);
  k.right = PlaneKernel::outer(i0.taps, i0.anchor, i5.taps, i5.anchor);
  k.down = PlaneKernel::outer(i5.taps, i5.anchor, i0.taps, i0.anchor);
  k.rightdown = PlaneKernel::outer(i5.taps, i5.anchor, i5.taps, i5.anchor);
  return k;
}

ImagePlane bspline3_prefilter(const ImagePlane& img) {
  if (img.h < 4 || img.w < 4) throw std::invalid_argument("prefilter needs extent >= 4");
  const double pole = std::sqrt(3.0) - 2.0;
  const double scale = -6.0 * pole;  // makes the DC gain exactly 1
  ImagePlane out = img;
  const long work = static_cast<long>(img.h) * img.w * 8;
  parallel_for(img.h, work, [&](long lo, long hi) {
    std::vector<double> line(img.w);
    for (long i = lo; i < hi; ++i) {
      for (int j = 0; j < img.w; ++j) line[j] = out.at(static_cast<int>(i), j);
      pole_pair_pass(line, pole);
      for (int j = 0; j < img.w; ++j) out.at(static_cast<int>(i), j) = scale * line[j];
    }
  });
  parallel_for(img.w, work, [&](long lo, long hi) {
    std::vector<double> line(img.h);
    for (long j = lo; j < hi; ++j) {
      for (int i = 0; i < img.h; ++i) line[i] = out.at(i, static_cast<int>(j));
      pole_pair_pass(line, pole);
      for (int i = 0; i < img.h; ++i) out.at(i, static_cast<int>(j)) = scale * line[i];
    }
  });
  return out;
}

ImagePlane zoom2x_baseline(const ImagePlane& img, const std::string& name) {
  BaselineKernel k = build_baseline(name);
  if (k.prefilter) {
    ImagePlane coef = bspline3_prefilter(img);
    return zoom2x_planes(img, coef, k.right, k.down, k.rightdown);
  }
  return zoom2x_planes(img, img, k.right, k.down, k.rightdown);
}

}  // namespace hz
