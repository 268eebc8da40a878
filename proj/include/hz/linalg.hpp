#pragma once

#include <vector>

namespace hz {

struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  static DenseMatrix identity(int n);

  double& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  DenseMatrix mul(const DenseMatrix& o) const;
  DenseMatrix sub(const DenseMatrix& o) const;
  double max_abs() const;
};

// Solves A x = b by LU with partial pivoting; throws on a vanishing pivot.
std::vector<double> lu_solve(DenseMatrix A, std::vector<double> b);

// Inverse of a unit lower triangular matrix by forward substitution.
DenseMatrix unit_lower_inverse(const DenseMatrix& L);

// Neumann series sum_{i=0}^{n-1} (I - L)^i; exact for unit lower triangular L
// because (I - L) is nilpotent.
DenseMatrix neumann_inverse(const DenseMatrix& L);

}  // namespace hz
