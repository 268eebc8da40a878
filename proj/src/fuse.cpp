#include "hz/fuse.hpp"

#include <algorithm>
#include <stdexcept>

#include "hz/fir.hpp"

namespace hz {

namespace {

// Full linear convolution of two tap arrays; anchors add.
PlaneKernel full_conv(const PlaneKernel& a, const PlaneKernel& b) {
  PlaneKernel r(a.h + b.h - 1, a.w + b.w - 1, a.ar + b.ar, a.ac + b.ac);
  for (int u = 0; u < a.h; ++u)
    for (int v = 0; v < a.w; ++v) {
      const double av = a.at(u, v);
      if (av == 0.0) continue;
      for (int s = 0; s < b.h; ++s)
        for (int t = 0; t < b.w; ++t) r.at(u + s, v + t) += av * b.at(s, t);
    }
  return r;
}

}  // namespace

FusedKernel fuse_kernel(const HermiteKernelTensor& K, const std::vector<PlaneKernel>& G) {
  if (K.sizes.size() != 2) throw std::invalid_argument("fusion requires a 2D kernel");
  if (K.flipped) throw std::invalid_argument("fusion expects correlation orientation");
  if (static_cast<int>(G.size()) != K.c)
    throw std::invalid_argument("one derivative filter required per kernel channel");

  std::vector<PlaneKernel> terms;
  terms.reserve(K.c);
  for (int j = 0; j < K.c; ++j) terms.push_back(full_conv(G[j], K.channel_plane(j)));

  // Union extent with aligned anchors.
  int left_r = 0, right_r = 0, left_c = 0, right_c = 0;
  for (const PlaneKernel& t : terms) {
    left_r = std::max(left_r, t.ar);
    right_r = std::max(right_r, t.h - 1 - t.ar);
    left_c = std::max(left_c, t.ac);
    right_c = std::max(right_c, t.w - 1 - t.ac);
  }
  FusedKernel f;
  f.offset = K.offset;
  f.plane = PlaneKernel(left_r + right_r + 1, left_c + right_c + 1, left_r, left_c);
  for (const PlaneKernel& t : terms) {
    const int dr = left_r - t.ar, dc = left_c - t.ac;
    for (int u = 0; u < t.h; ++u)
      for (int v = 0; v < t.w; ++v) f.plane.at(u + dr, v + dc) += t.at(u, v);
  }
  return f;
}

std::vector<PlaneKernel> fir_filter_planes(const std::vector<int>& nu, DerivMode mode) {
  if (nu.size() != 2) throw std::invalid_argument("filter planes are 2D");
  const int L = fir_length(mode);
  if (L == 0) throw std::invalid_argument("FIR mode required");
  std::vector<PlaneKernel> planes;
  for (const MultiIndex& k : reverse_lex_enumerate(nu)) {
    FirFilter fr = k[0] > 0 ? fir_taps(k[0], L) : fir_impulse();
    FirFilter fc = k[1] > 0 ? fir_taps(k[1], L) : fir_impulse();
    planes.push_back(PlaneKernel::outer(fr.taps, fr.anchor(), fc.taps, fc.anchor()));
  }
  return planes;
}

ZoomKernelSet build_zoom_set(int stencil, const std::vector<int>& nu, DerivMode mode) {
  if (nu.size() != 2) throw std::invalid_argument("zoom kernels are 2D");
  ZoomKernelSet set;
  set.stencil = stencil;
  set.nu = nu;
  set.mode = mode;
  const std::vector<int> sizes = {stencil, stencil};
  auto build = [&](double fr, double fc) {
    FractionalOffset off;
    off.frac = {fr, fc};
    return build_kernel(off, sizes, nu);
  };
  set.right = build(0.0, 0.5);
  set.down = build(0.5, 0.0);
  set.rightdown = build(0.5, 0.5);
  set.right_conv = set.right.flip();
  set.down_conv = set.down.flip();
  set.rightdown_conv = set.rightdown.flip();
  if (fir_length(mode) > 0) {
    const auto G = fir_filter_planes(nu, mode);
    set.fused = {fuse_kernel(set.right, G), fuse_kernel(set.down, G),
                 fuse_kernel(set.rightdown, G)};
  }
  return set;
}

}  // namespace hz
