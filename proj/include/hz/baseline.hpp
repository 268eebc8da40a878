#pragma once

#include <string>
#include <vector>

#include "hz/image.hpp"

namespace hz {

// 1D resampling weights of a named generator at a fractional offset in [0,1):
// taps apply to consecutive samples starting at floor(q) - anchor.
struct AxisWeights {
  std::vector<double> taps;
  int anchor = 0;
};

// name in {nearest, bilinear, bicubic, bspline3}. nearest rounds half up.
AxisWeights baseline_axis_weights(const std::string& name, double frac);

// Keys cubic with a = -1/2, and the centered cubic B-spline; both even,
// support [-2, 2].
double keys_cubic(double t);
double bspline3_generator(double t);

struct BaselineKernel {
  std::string name;
  bool prefilter = false;  // bspline3 resamples interpolation coefficients
  PlaneKernel right, down, rightdown;
};

BaselineKernel build_baseline(const std::string& name);

// Cubic B-spline interpolation coefficients: inverts the sampled generator
// [1/6, 4/6, 1/6] per row then per column via the reciprocal pole pair
// z = sqrt(3) - 2, mirror boundary. Requires extent >= 4.
ImagePlane bspline3_prefilter(const ImagePlane& img);

// x2 zoom through the shared three-plane pipeline.
ImagePlane zoom2x_baseline(const ImagePlane& img, const std::string& name);

}  // namespace hz
