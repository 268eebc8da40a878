#pragma once

#include <vector>

#include "hz/deriv_stack.hpp"
#include "hz/image.hpp"
#include "hz/kernel.hpp"

namespace hz {

// Single-plane kernel equivalent to applying c derivative filters followed by
// the c-channel kernel tensor. Correlation orientation.
struct FusedKernel {
  PlaneKernel plane;
  FractionalOffset offset;
};

// G[j] must be the 2D derivative filter for reverse-lex channel j (G[0] the
// unit impulse), correlation orientation. The fused plane is the sum over
// channels of the full linear convolution of G[j] with channel j of K.
FusedKernel fuse_kernel(const HermiteKernelTensor& K, const std::vector<PlaneKernel>& G);

// The c derivative filter planes for one FIR mode, reverse-lex order.
std::vector<PlaneKernel> fir_filter_planes(const std::vector<int>& nu, DerivMode mode);

// Kernels for the three x2-zoom offsets, in (row, col) convention:
// right = (0, 0.5), down = (0.5, 0), rightdown = (0.5, 0.5).
struct ZoomKernelSet {
  int stencil = 0;
  std::vector<int> nu;
  DerivMode mode = DerivMode::Exact;
  // Channel tensors, correlation and convolution orientations.
  HermiteKernelTensor right, down, rightdown;
  HermiteKernelTensor right_conv, down_conv, rightdown_conv;
  // Fused single planes, present for FIR modes only.
  std::vector<FusedKernel> fused;  // right, down, rightdown
};

ZoomKernelSet build_zoom_set(int stencil, const std::vector<int>& nu, DerivMode mode);

}  // namespace hz
