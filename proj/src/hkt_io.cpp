#include "hz/hkt_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hz/stencil.hpp"

namespace hz {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void dump_hkt(std::ostream& os, const HermiteKernelTensor& K) {
  const int n = static_cast<int>(K.sizes.size());
  os << "HKT " << n;
  for (int s : K.sizes) os << ' ' << s;
  os << ' ' << K.c << ' ' << (K.flipped ? 1 : 0);
  for (double f : K.offset.frac) os << ' ' << fmt17(f);
  os << '\n';
  const int row_len = K.sizes.back();
  const long spatial = K.spatial_count();
  for (int ch = 0; ch < K.c; ++ch) {
    if (ch > 0) os << '\n';
    for (long flat = 0; flat < spatial; ++flat) {
      os << fmt17(K.w[flat * K.c + ch]);
      os << ((flat % row_len == row_len - 1) ? '\n' : ' ');
    }
  }
}

std::string dump_hkt_string(const HermiteKernelTensor& K) {
  std::ostringstream os;
  dump_hkt(os, K);
  return os.str();
}

HermiteKernelTensor parse_hkt(std::istream& is) {
  std::string magic;
  is >> magic;
  if (magic != "HKT") throw std::runtime_error("not an HKT dump");
  int n = 0;
  is >> n;
  if (!is || n < 1) throw std::runtime_error("bad HKT dimensionality");
  HermiteKernelTensor K;
  K.sizes.resize(n);
  for (int& s : K.sizes) is >> s;
  int flipped_flag = 0;
  is >> K.c >> flipped_flag;
  K.flipped = flipped_flag != 0;
  K.offset.frac.resize(n);
  for (double& f : K.offset.frac) is >> f;
  if (!is) throw std::runtime_error("truncated HKT header");
  K.anchor.resize(n);
  for (int ax = 0; ax < n; ++ax) {
    const int a = stencil_anchor(K.sizes[ax], K.offset.frac[ax]);
    K.anchor[ax] = K.flipped ? K.sizes[ax] - 1 - a : a;
  }
  const long spatial = K.spatial_count();
  K.w.assign(spatial * K.c, 0.0);
  for (int ch = 0; ch < K.c; ++ch)
    for (long flat = 0; flat < spatial; ++flat) {
      double v;
      if (!(is >> v)) throw std::runtime_error("truncated HKT weights");
      K.w[flat * K.c + ch] = v;
    }
  return K;
}

}  // namespace hz
