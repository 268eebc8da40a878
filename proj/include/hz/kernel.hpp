#pragma once

#include <vector>

#include "hz/image.hpp"
#include "hz/linalg.hpp"
#include "hz/multi_index.hpp"

namespace hz {

// Per-axis fractional offset of the query point, each component in [0, 1).
struct FractionalOffset {
  std::vector<double> frac;

  int dim() const { return static_cast<int>(frac.size()); }
  void validate() const;
};

// Convolution weights of one fractional offset: spatial extent N_1 x ... x N_n
// with c channels, one per reverse-lex derivative multi-index. Channel 0 is the
// value channel. `anchor` holds, per axis, the index of the stencil node at
// floor(query); the query sits at anchor + frac in kernel coordinates.
struct HermiteKernelTensor {
  std::vector<int> sizes;
  std::vector<int> nu;
  std::vector<MultiIndex> channels;
  FractionalOffset offset;
  std::vector<int> anchor;
  bool flipped = false;  // false: correlation orientation; true: convolution
  int c = 0;
  std::vector<double> w;  // spatial row-major (last axis fastest), channel minor

  long spatial_count() const;
  long spatial_flat(const std::vector<int>& spatial) const;
  double at(const std::vector<int>& spatial, int ch) const;
  double& at(const std::vector<int>& spatial, int ch);

  // Spatially reversed copy (toggles orientation, mirrors anchors).
  HermiteKernelTensor flip() const;

  // Channel j as a 2D tap array (2D kernels only).
  PlaneKernel channel_plane(int ch) const;

  double channel_sum(int ch) const;
};

// Builds the kernel tensor for one fractional offset on a stencil of the given
// per-axis sizes with constant multiplicities: row a equals H_a^T Lambda_a^{-1}
// evaluated at the query point of the integer stencil grid.
HermiteKernelTensor build_kernel(const FractionalOffset& offset, const std::vector<int>& sizes,
                                 const std::vector<int>& nu, bool flipped = false);

// One-axis kernel weights as an N x nu matrix (node major). The n-D tensor is
// the outer product of its axis matrices; tests use this as a cross-check.
DenseMatrix axis_kernel_matrix(int size, int nu, double frac);

}  // namespace hz
