#include "hz/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hz {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::mul(const DenseMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  DenseMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      double v = at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

DenseMatrix DenseMatrix::sub(const DenseMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  DenseMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<double> lu_solve(DenseMatrix A, std::vector<double> b) {
  const int n = A.rows;
  if (A.cols != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("lu_solve shape mismatch");
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(A.at(r, col)) > std::fabs(A.at(pivot, col))) pivot = r;
    if (A.at(pivot, col) == 0.0) throw std::runtime_error("singular system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(A.at(pivot, c), A.at(col, c));
      std::swap(b[pivot], b[col]);
    }
    const double d = A.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = A.at(r, col) / d;
      if (f == 0.0) continue;
      A.at(r, col) = 0.0;
      for (int c = col + 1; c < n; ++c) A.at(r, c) -= f * A.at(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int r = n; r-- > 0;) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A.at(r, c) * x[c];
    x[r] = s / A.at(r, r);
  }
  return x;
}

DenseMatrix unit_lower_inverse(const DenseMatrix& L) {
  const int n = L.rows;
  DenseMatrix inv(n, n);
  // Column c of the inverse solves L x = e_c by forward substitution.
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      double s = (r == c) ? 1.0 : 0.0;
      for (int k = 0; k < r; ++k) s -= L.at(r, k) * inv.at(k, c);
      inv.at(r, c) = s;
    }
  }
  return inv;
}

DenseMatrix neumann_inverse(const DenseMatrix& L) {
  const int n = L.rows;
  DenseMatrix N = DenseMatrix::identity(n).sub(L);
  DenseMatrix sum = DenseMatrix::identity(n);
  DenseMatrix power = DenseMatrix::identity(n);
  for (int i = 1; i < n; ++i) {
    power = power.mul(N);
    for (size_t j = 0; j < sum.a.size(); ++j) sum.a[j] += power.a[j];
  }
  return sum;
}

}  // namespace hz
