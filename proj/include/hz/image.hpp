#pragma once

#include <vector>

namespace hz {

// 2D grayscale plane of real samples, nominally in [0, 255], row-major.
struct ImagePlane {
  int h = 0, w = 0;
  std::vector<double> px;

  ImagePlane() = default;
  ImagePlane(int height, int width, double fill = 0.0)
      : h(height), w(width), px(static_cast<size_t>(height) * width, fill) {}

  double& at(int i, int j) { return px[static_cast<size_t>(i) * w + j]; }
  double at(int i, int j) const { return px[static_cast<size_t>(i) * w + j]; }
  bool same_shape(const ImagePlane& o) const { return h == o.h && w == o.w; }
};

enum class BoundaryMode { Mirror, Replicate };

// Whole-sample symmetric mirror (edge sample not repeated) or edge replication.
// The per-axis signs model planes that extend antisymmetrically across borders
// (odd derivative orders of a mirrored image): each reflection multiplies the
// sample by the axis sign.
struct BoundaryPolicy {
  BoundaryMode mode = BoundaryMode::Mirror;
  double row_sign = 1.0;
  double col_sign = 1.0;
};

// Fold t into [0, n) by whole-sample reflection (period 2n - 2).
long mirror_index(long t, long n);

// Extended sample lookup under the boundary policy.
double sample_extended(const ImagePlane& img, long i, long j, const BoundaryPolicy& b);

// Dense 2D tap array with an anchor marking the tap aligned with the output
// position. Correlation orientation unless stated otherwise.
struct PlaneKernel {
  int h = 0, w = 0;
  int ar = 0, ac = 0;
  std::vector<double> taps;

  PlaneKernel() = default;
  PlaneKernel(int height, int width, int anchor_r, int anchor_c)
      : h(height), w(width), ar(anchor_r), ac(anchor_c),
        taps(static_cast<size_t>(height) * width, 0.0) {}
  double& at(int u, int v) { return taps[static_cast<size_t>(u) * w + v]; }
  double at(int u, int v) const { return taps[static_cast<size_t>(u) * w + v]; }
  double sum() const;
  PlaneKernel flipped() const;  // spatial reversal, anchor mirrored
  static PlaneKernel impulse();
  static PlaneKernel outer(const std::vector<double>& row_taps, int row_anchor,
                           const std::vector<double>& col_taps, int col_anchor);
};

// out(i,j) = sum_{u,v} k(u,v) * img~(i + u - ar, j + v - ac).
ImagePlane correlate2d(const ImagePlane& img, const PlaneKernel& k, const BoundaryPolicy& b = {});

// True convolution: out(i,j) = sum_{u,v} k(u,v) * img~(i - u + ar, j - v + ac).
// Throws if the kernel extent exceeds one mirror period of the image.
ImagePlane convolve2d(const ImagePlane& img, const PlaneKernel& k, const BoundaryPolicy& b = {});

// Separable single-axis passes (correlation orientation).
ImagePlane correlate_rows(const ImagePlane& img, const std::vector<double>& taps, int anchor,
                          const BoundaryPolicy& b = {});
ImagePlane correlate_cols(const ImagePlane& img, const std::vector<double>& taps, int anchor,
                          const BoundaryPolicy& b = {});

}  // namespace hz
