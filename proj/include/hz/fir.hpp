#pragma once

#include <vector>

#include "hz/image.hpp"

namespace hz {

// Odd-length central FIR derivative filter in correlation orientation: taps at
// offsets -(L-1)/2 .. (L-1)/2 from the output sample.
struct FirFilter {
  std::vector<double> taps;
  int order = 0;

  int length() const { return static_cast<int>(taps.size()); }
  int anchor() const { return (length() - 1) / 2; }
};

// Unique taps solving the moment system sum_m taps[m] * m^p = p! * [p == d]
// for p = 0 .. L-1, m centered.
FirFilter fir_taps(int derivative_order, int length);

// Length-1 identity filter (derivative order 0).
FirFilter fir_impulse();

// Separable application, rows then columns, mirror boundary. The row filter
// differentiates along axis 0 (i), the column filter along axis 1 (j).
ImagePlane apply_fir(const ImagePlane& img, const FirFilter& row_filter,
                     const FirFilter& col_filter);

}  // namespace hz
