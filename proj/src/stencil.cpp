#include "hz/stencil.hpp"

#include <cmath>
#include <stdexcept>

namespace hz {

long round_half_up(double q) { return static_cast<long>(std::floor(q + 0.5)); }

std::vector<long> select_stencil(double q, int size) {
  if (size < 1) throw std::invalid_argument("stencil size must be >= 1");
  long start;
  if (size % 2 == 1) {
    start = round_half_up(q) - (size - 1) / 2;
  } else {
    start = static_cast<long>(std::floor(q)) - size / 2 + 1;
  }
  std::vector<long> window(size);
  for (int i = 0; i < size; ++i) window[i] = start + i;
  return window;
}

int stencil_anchor(int size, double frac) {
  if (size < 1) throw std::invalid_argument("stencil size must be >= 1");
  if (!(frac >= 0.0 && frac < 1.0)) throw std::invalid_argument("fractional offset outside [0,1)");
  if (size % 2 == 1) return frac < 0.5 ? (size - 1) / 2 : (size - 1) / 2 - 1;
  return size / 2 - 1;
}

}  // namespace hz
