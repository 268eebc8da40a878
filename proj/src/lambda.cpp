#include "hz/lambda.hpp"

#include <cmath>
#include <stdexcept>

#include "hz/hermite_basis.hpp"

namespace hz {

DenseMatrix lambda_matrix_1d(const std::vector<double>& axis_nodes,
                             const std::vector<int>& nu_per_node, int a_index) {
  const int nu_a = nu_per_node.at(a_index);
  const double a = axis_nodes.at(a_index);
  Series s = univariate_basis_series(axis_nodes, nu_per_node, a_index, a, nu_a - 1);
  DenseMatrix L(nu_a, nu_a);
  for (int i = 0; i < nu_a; ++i)
    for (int j = 0; j <= i; ++j) L.at(i, j) = factorial(i) / factorial(j) * s[i - j];
  return L;
}

DenseMatrix lambda_matrix(const RectilinearGrid& grid, const std::vector<int>& a_idx,
                          const MultiplicityVector& nu) {
  grid.validate();
  const int n = grid.dim();
  std::vector<int> local_nu(n);
  std::vector<DenseMatrix> axis_lambda(n);
  for (int ax = 0; ax < n; ++ax) {
    local_nu[ax] = nu.at(ax, a_idx[ax]);
    axis_lambda[ax] = lambda_matrix_1d(grid.axes[ax], axis_multiplicities(grid, nu, ax), a_idx[ax]);
  }
  const auto channels = reverse_lex_enumerate(local_nu);
  const int c = static_cast<int>(channels.size());
  DenseMatrix L(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      double v = 1.0;
      for (int ax = 0; ax < n; ++ax) {
        const int ki = channels[i][ax], kj = channels[j][ax];
        if (kj > ki) {
          v = 0.0;
          break;
        }
        v *= axis_lambda[ax].at(ki, kj);
      }
      L.at(i, j) = v;
    }
  return L;
}

DenseMatrix lambda_inverse(const DenseMatrix& L) {
  if (L.rows != L.cols) throw std::invalid_argument("lambda matrix must be square");
  for (int i = 0; i < L.rows; ++i) {
    if (L.at(i, i) != 1.0) throw std::invalid_argument("lambda matrix must have unit diagonal");
    for (int j = i + 1; j < L.cols; ++j)
      if (L.at(i, j) != 0.0) throw std::invalid_argument("lambda matrix must be lower triangular");
  }
  DenseMatrix by_subst = unit_lower_inverse(L);
  DenseMatrix by_series = neumann_inverse(L);
  // Entries scale like prod_axis |lambda_ax| (~1e3 for 5 nodes, nu = 3), so
  // the agreement bound is relative to the inverse's own magnitude.
  const double tol = 1e-12 * std::max(1.0, by_subst.max_abs());
  if (by_subst.sub(by_series).max_abs() > tol)
    throw std::runtime_error("lambda inverse routes disagree beyond 1e-12 relative");
  return by_subst;
}

}  // namespace hz
