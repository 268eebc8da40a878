#pragma once

#include <vector>

#include "hz/grid.hpp"
#include "hz/multi_index.hpp"

namespace hz {

// Interpolation data: for each grid node (row-major flat index) the
// reverse-lex ordered condition values t_a^k.
struct HermiteData {
  std::vector<std::vector<double>> t;

  static HermiteData zeros(const RectilinearGrid& grid, const MultiplicityVector& nu);
};

// Coefficients x_a^k of f = sum x_a^k H_(a,k), same layout as HermiteData.
struct InterpolationSolution {
  std::vector<std::vector<double>> x;
};

// Total number of interpolation conditions: prod_i sum_a nu_i(a).
long condition_count(const RectilinearGrid& grid, const MultiplicityVector& nu);

// Closed-form interpolant value: sum over nodes of H_a^T Lambda_a^{-1} T_a.
double interpolate_direct(const RectilinearGrid& grid, const MultiplicityVector& nu,
                          const HermiteData& data, const std::vector<double>& x);

// Brute-force oracle: solve the dense system of all interpolation conditions.
InterpolationSolution oracle_solve(const RectilinearGrid& grid, const MultiplicityVector& nu,
                                   const HermiteData& data);

double evaluate_solution(const RectilinearGrid& grid, const MultiplicityVector& nu,
                         const InterpolationSolution& sol, const std::vector<double>& x);

struct DegreeInfo {
  std::vector<int> per_axis;
  int total = 0;
};

// Per-axis degree max_a min_b (nu_i(a) - nu_i(b)) - 1 + sum_a nu_i(a); total is
// the sum over axes.
DegreeInfo max_degree(const RectilinearGrid& grid, const MultiplicityVector& nu);

}  // namespace hz
