#include "hz/interpolant.hpp"

#include <stdexcept>

#include "hz/hermite_basis.hpp"
#include "hz/lambda.hpp"
#include "hz/linalg.hpp"

namespace hz {

namespace {

std::vector<int> local_nu_at(const RectilinearGrid& grid, const MultiplicityVector& nu,
                             const std::vector<int>& a_idx) {
  std::vector<int> local(grid.dim());
  for (int ax = 0; ax < grid.dim(); ++ax) local[ax] = nu.at(ax, a_idx[ax]);
  return local;
}

void check_data(const RectilinearGrid& grid, const MultiplicityVector& nu,
                const std::vector<std::vector<double>>& per_node) {
  if (static_cast<long>(per_node.size()) != grid.node_count())
    throw std::invalid_argument("data incomplete: one condition vector required per node");
  for (long flat = 0; flat < grid.node_count(); ++flat) {
    const auto idx = grid.unflatten(flat);
    long c = 1;
    for (int ax = 0; ax < grid.dim(); ++ax) c *= nu.at(ax, idx[ax]);
    if (static_cast<long>(per_node[flat].size()) != c)
      throw std::invalid_argument("data incomplete: wrong condition count at a node");
  }
}

}  // namespace

HermiteData HermiteData::zeros(const RectilinearGrid& grid, const MultiplicityVector& nu) {
  HermiteData d;
  d.t.resize(grid.node_count());
  for (long flat = 0; flat < grid.node_count(); ++flat) {
    const auto idx = grid.unflatten(flat);
    long c = 1;
    for (int ax = 0; ax < grid.dim(); ++ax) c *= nu.at(ax, idx[ax]);
    d.t[flat].assign(c, 0.0);
  }
  return d;
}

long condition_count(const RectilinearGrid& grid, const MultiplicityVector& nu) {
  long total = 1;
  for (int ax = 0; ax < grid.dim(); ++ax) {
    long axis_sum = 0;
    for (size_t node = 0; node < grid.axes[ax].size(); ++node)
      axis_sum += nu.at(ax, static_cast<int>(node));
    total *= axis_sum;
  }
  return total;
}

double interpolate_direct(const RectilinearGrid& grid, const MultiplicityVector& nu,
                          const HermiteData& data, const std::vector<double>& x) {
  grid.validate();
  nu.validate();
  check_data(grid, nu, data.t);
  double f = 0.0;
  for (long flat = 0; flat < grid.node_count(); ++flat) {
    const auto a_idx = grid.unflatten(flat);
    const auto channels = reverse_lex_enumerate(local_nu_at(grid, nu, a_idx));
    const int c = static_cast<int>(channels.size());
    DenseMatrix Linv = lambda_inverse(lambda_matrix(grid, a_idx, nu));
    // coeffs = Lambda^{-1} T_a, then f += sum_k coeffs[k] * H_(a,k)(x).
    for (int k = 0; k < c; ++k) {
      double coeff = 0.0;
      for (int j = 0; j < c; ++j) coeff += Linv.at(k, j) * data.t[flat][j];
      if (coeff == 0.0) continue;
      f += coeff * basis_eval_factored(grid, nu, a_idx, channels[k], x);
    }
  }
  return f;
}

InterpolationSolution oracle_solve(const RectilinearGrid& grid, const MultiplicityVector& nu,
                                   const HermiteData& data) {
  grid.validate();
  nu.validate();
  check_data(grid, nu, data.t);
  // Unknown layout: (node, channel) pairs flattened in node-major order.
  std::vector<long> offset(grid.node_count() + 1, 0);
  std::vector<std::vector<MultiIndex>> channels(grid.node_count());
  for (long flat = 0; flat < grid.node_count(); ++flat) {
    channels[flat] = reverse_lex_enumerate(local_nu_at(grid, nu, grid.unflatten(flat)));
    offset[flat + 1] = offset[flat] + static_cast<long>(channels[flat].size());
  }
  const long total = offset[grid.node_count()];
  DenseMatrix A(static_cast<int>(total), static_cast<int>(total));
  std::vector<double> rhs(total);
  for (long arow = 0; arow < grid.node_count(); ++arow) {
    const auto a_idx = grid.unflatten(arow);
    for (size_t mi = 0; mi < channels[arow].size(); ++mi) {
      const long row = offset[arow] + static_cast<long>(mi);
      rhs[row] = data.t[arow][mi];
      for (long bcol = 0; bcol < grid.node_count(); ++bcol) {
        const auto b_idx = grid.unflatten(bcol);
        for (size_t ki = 0; ki < channels[bcol].size(); ++ki) {
          const long col = offset[bcol] + static_cast<long>(ki);
          A.at(static_cast<int>(row), static_cast<int>(col)) =
              basis_partial_at_node(grid, nu, b_idx, channels[bcol][ki], a_idx, channels[arow][mi]);
        }
      }
    }
  }
  std::vector<double> x;
  try {
    x = lu_solve(std::move(A), std::move(rhs));
  } catch (const std::runtime_error&) {
    throw std::runtime_error("oracle system singular: grid/multiplicity bug");
  }
  InterpolationSolution sol;
  sol.x.resize(grid.node_count());
  for (long flat = 0; flat < grid.node_count(); ++flat)
    sol.x[flat].assign(x.begin() + offset[flat], x.begin() + offset[flat + 1]);
  return sol;
}

double evaluate_solution(const RectilinearGrid& grid, const MultiplicityVector& nu,
                         const InterpolationSolution& sol, const std::vector<double>& x) {
  check_data(grid, nu, sol.x);
  double f = 0.0;
  for (long flat = 0; flat < grid.node_count(); ++flat) {
    const auto a_idx = grid.unflatten(flat);
    const auto channels = reverse_lex_enumerate(local_nu_at(grid, nu, a_idx));
    for (size_t k = 0; k < channels.size(); ++k) {
      if (sol.x[flat][k] == 0.0) continue;
      f += sol.x[flat][k] * basis_eval_factored(grid, nu, a_idx, channels[k], x);
    }
  }
  return f;
}

DegreeInfo max_degree(const RectilinearGrid& grid, const MultiplicityVector& nu) {
  DegreeInfo info;
  for (int ax = 0; ax < grid.dim(); ++ax) {
    const size_t n = grid.axes[ax].size();
    long sum = 0;
    int head = 0;
    bool first = true;
    for (size_t a = 0; a < n; ++a) {
      const int nu_a = nu.at(ax, static_cast<int>(a));
      sum += nu_a;
      int min_diff = 0;
      bool first_b = true;
      for (size_t b = 0; b < n; ++b) {
        const int d = nu_a - nu.at(ax, static_cast<int>(b));
        if (first_b || d < min_diff) min_diff = d;
        first_b = false;
      }
      if (first || min_diff > head) head = min_diff;
      first = false;
    }
    info.per_axis.push_back(head - 1 + static_cast<int>(sum));
    info.total += info.per_axis.back();
  }
  return info;
}

}  // namespace hz
