#pragma once

#include <vector>

namespace hz {

// Rounding used for stencil centering: ties at .5 go toward +infinity.
long round_half_up(double q);

// Consecutive integer window of `size` nodes around the query coordinate q.
// Odd sizes center on round_half_up(q); even sizes span
// [floor(q) - size/2 + 1, floor(q) + size/2].
std::vector<long> select_stencil(double q, int size);

struct StencilSpec {
  std::vector<int> sizes;  // per axis, >= 1
};

// Index of the node at floor(q) inside the window, for a query q = m + frac
// with frac in [0,1). Kernel-local query coordinate is anchor + frac.
int stencil_anchor(int size, double frac);

}  // namespace hz
