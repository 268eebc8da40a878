#include <cmath>
#include <random>

#include "doctest.h"
#include "hz/fuse.hpp"

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

TEST_CASE("filter planes: impulse value channel, separable derivative planes") {
  auto G = fir_filter_planes({2, 2}, DerivMode::FIR5);
  REQUIRE(G.size() == 4);
  CHECK(G[0].h == 1);
  CHECK(G[0].w == 1);
  CHECK(G[0].at(0, 0) == 1.0);
  // Channel order (0,0), (0,1), (1,0), (1,1): column filter first.
  CHECK(G[1].h == 1);
  CHECK(G[1].w == 5);
  CHECK(G[2].h == 5);
  CHECK(G[2].w == 1);
  CHECK(G[3].h == 5);
  CHECK(G[3].w == 5);
  CHECK(G[1].ac == 2);
  CHECK(G[2].ar == 2);
  // d1 taps along the row direction.
  CHECK(G[1].at(0, 3) == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(G[3].at(2, 2) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fused kernel anchors add and extents union") {
  auto K = build_kernel({{0.5, 0.5}}, {5, 5}, {2, 2});
  auto G = fir_filter_planes({2, 2}, DerivMode::FIR5);
  FusedKernel f = fuse_kernel(K, G);
  // K anchored at 1 with extent 5; the widest term pads by the G anchor 2.
  CHECK(f.plane.ar == K.anchor[0] + 2);
  CHECK(f.plane.ac == K.anchor[1] + 2);
  CHECK(f.plane.h == 9);
  CHECK(f.plane.w == 9);
  CHECK(f.offset.frac == std::vector<double>{0.5, 0.5});
  // Value-channel sum survives fusion: derivative filters have zero DC.
  CHECK(f.plane.sum() == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("fused plane equals filter-then-channel application in the interior") {
  ImagePlane img = random_image(32, 32, 91);
  for (DerivMode mode : {DerivMode::FIR3, DerivMode::FIR5}) {
    auto K = build_kernel({{0.5, 0.2}}, {5, 5}, {2, 2});
    auto G = fir_filter_planes({2, 2}, mode);
    FusedKernel f = fuse_kernel(K, G);
    ImagePlane a = correlate2d(img, f.plane);
    ImagePlane b(32, 32, 0.0);
    for (int j = 0; j < K.c; ++j) {
      ImagePlane d = correlate2d(img, G[j]);
      ImagePlane r = correlate2d(d, K.channel_plane(j));
      for (size_t t = 0; t < b.px.size(); ++t) b.px[t] += r.px[t];
    }
    const int m = 8;  // clear of every extended sample
    for (int i = m; i < 32 - m; ++i)
      for (int j = m; j < 32 - m; ++j)
        CHECK(a.at(i, j) == doctest::Approx(b.at(i, j)).epsilon(1e-10));
  }
}

TEST_CASE("fusion validates its inputs") {
  auto K = build_kernel({{0.5, 0.5}}, {5, 5}, {2, 2});
  auto G = fir_filter_planes({2, 2}, DerivMode::FIR5);
  CHECK_THROWS(fuse_kernel(K.flip(), G));  // convolution orientation
  G.pop_back();
  CHECK_THROWS(fuse_kernel(K, G));  // one filter per channel
  CHECK_THROWS(fir_filter_planes({2, 2}, DerivMode::IIR));
  CHECK_THROWS(fir_filter_planes({2}, DerivMode::FIR5));
}

TEST_CASE("zoom kernel set: offsets, orientations, fused planes") {
  ZoomKernelSet ks = build_zoom_set(5, {3, 3}, DerivMode::FIR7);
  CHECK(ks.stencil == 5);
  CHECK(ks.nu == std::vector<int>{3, 3});
  CHECK(ks.mode == DerivMode::FIR7);
  CHECK(ks.right.offset.frac == std::vector<double>{0.0, 0.5});
  CHECK(ks.down.offset.frac == std::vector<double>{0.5, 0.0});
  CHECK(ks.rightdown.offset.frac == std::vector<double>{0.5, 0.5});
  REQUIRE(ks.fused.size() == 3);
  CHECK(ks.fused[0].offset.frac == ks.right.offset.frac);
  // Convolution twins are spatial flips of the correlation tensors.
  CHECK(ks.right_conv.flipped);
  CHECK(ks.right_conv.w == ks.right.flip().w);
  CHECK(ks.rightdown_conv.w == ks.rightdown.flip().w);

  ZoomKernelSet iir = build_zoom_set(5, {3, 3}, DerivMode::IIR);
  CHECK(iir.fused.empty());
  CHECK(iir.mode == DerivMode::IIR);
}

TEST_CASE("right kernel at row offset zero involves only value-row channels") {
  // frac 0 along rows: the tensor separates, and all channels with a nonzero
  // row derivative order carry exactly zero weight.
  ZoomKernelSet ks = build_zoom_set(5, {3, 3}, DerivMode::FIR5);
  for (int j = 0; j < ks.right.c; ++j) {
    if (ks.right.channels[j][0] == 0) continue;
    for (int a0 = 0; a0 < 5; ++a0)
      for (int a1 = 0; a1 < 5; ++a1) CHECK(ks.right.at({a0, a1}, j) == 0.0);
  }
}
