#pragma once

#include "hz/grid.hpp"
#include "hz/linalg.hpp"
#include "hz/multi_index.hpp"

namespace hz {

// Unit lower triangular matrix of basis cross-derivatives at one node: entry
// (i, j) = d^{k_i} H_(a, k_j) evaluated at a, with rows/columns in reverse-lex
// channel order for that node's multiplicities.
DenseMatrix lambda_matrix(const RectilinearGrid& grid, const std::vector<int>& a_idx,
                          const MultiplicityVector& nu);

// One-axis building block: (nu x nu) matrix with entry (i, j) equal to the
// i-th derivative at the node of (x - a)^j H_a(x) / j!.
DenseMatrix lambda_matrix_1d(const std::vector<double>& axis_nodes,
                             const std::vector<int>& nu_per_node, int a_index);

// Inverse computed two independent ways (forward substitution and the Neumann
// series over the nilpotent I - L); throws if they disagree beyond 1e-12
// relative to the inverse's largest entry.
DenseMatrix lambda_inverse(const DenseMatrix& L);

}  // namespace hz
