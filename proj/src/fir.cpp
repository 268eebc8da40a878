#include "hz/fir.hpp"

#include <stdexcept>

#include "hz/hermite_basis.hpp"
#include "hz/linalg.hpp"

namespace hz {

FirFilter fir_taps(int derivative_order, int length) {
  if (length < 1 || length % 2 == 0) throw std::invalid_argument("filter length must be odd");
  if (derivative_order < 0 || derivative_order >= length)
    throw std::invalid_argument("derivative order must be below the filter length");
  const int half = (length - 1) / 2;
  DenseMatrix A(length, length);
  std::vector<double> rhs(length, 0.0);
  for (int p = 0; p < length; ++p) {
    for (int m = -half; m <= half; ++m) {
      double power = 1.0;
      for (int e = 0; e < p; ++e) power *= m;
      A.at(p, m + half) = power;
    }
    rhs[p] = (p == derivative_order) ? factorial(p) : 0.0;
  }
  FirFilter f;
  f.taps = lu_solve(std::move(A), std::move(rhs));
  f.order = derivative_order;
  return f;
}

FirFilter fir_impulse() {
  FirFilter f;
  f.taps = {1.0};
  f.order = 0;
  return f;
}

ImagePlane apply_fir(const ImagePlane& img, const FirFilter& row_filter,
                     const FirFilter& col_filter) {
  if (img.h < 1 || img.w < 1) throw std::invalid_argument("empty image");
  if (row_filter.length() > 2 * img.h + 1 || col_filter.length() > 2 * img.w + 1)
    throw std::invalid_argument("filter longer than twice the image extent plus one");
  ImagePlane tmp = correlate_rows(img, row_filter.taps, row_filter.anchor());
  return correlate_cols(tmp, col_filter.taps, col_filter.anchor());
}

}  // namespace hz
