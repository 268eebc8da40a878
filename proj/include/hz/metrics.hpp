#pragma once

#include "hz/image.hpp"

namespace hz {

// Plane copy with every sample rounded half up and clamped to [0, 255].
ImagePlane quantize8(const ImagePlane& img);

struct QualityScore {
  double psnr_db = 0.0;  // +infinity when the quantized images are identical
  double ssim = 0.0;
};

// 10 log10(255^2 / MSE) after both planes are quantized to 8 bits; MSE = 0
// reports +infinity. Dimensions must match.
double psnr(const ImagePlane& ref, const ImagePlane& test);

// Mean local SSIM over fully-overlapping 11x11 windows, Gaussian weights
// sigma = 1.5, K1 = 0.01, K2 = 0.03, L = 255. Both planes quantized first.
// Requires extents >= 11.
double ssim(const ImagePlane& ref, const ImagePlane& test);

QualityScore quality(const ImagePlane& ref, const ImagePlane& test);

}  // namespace hz
