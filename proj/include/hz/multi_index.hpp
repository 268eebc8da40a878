#pragma once

#include <vector>

namespace hz {

// Derivative-order vector, one non-negative component per axis.
using MultiIndex = std::vector<int>;

int grade(const MultiIndex& k);

// Componentwise partial order a <= b.
bool leq_componentwise(const MultiIndex& a, const MultiIndex& b);

// Degree reverse lexicographic order: lower grade first; within a grade the
// index with the larger component at the highest differing axis comes first.
bool reverse_lex_less(const MultiIndex& a, const MultiIndex& b);

// Per-axis interpolation multiplicities. Constant mode stores one value per
// axis (kernel construction requires this); general mode stores one value per
// node per axis.
struct MultiplicityVector {
  std::vector<int> nu;                     // constant mode, size = dim
  std::vector<std::vector<int>> per_node;  // general mode, [axis][node]

  static MultiplicityVector constant(std::vector<int> nu);
  static MultiplicityVector per_node_mode(std::vector<std::vector<int>> values);

  bool constant_mode() const { return per_node.empty(); }
  int dim() const;
  int at(int axis, int node) const;
  long cardinality() const;  // c = prod(nu); constant mode only
  void validate() const;     // every component >= 1
};

// All k with 0 <= k_i < nu_i, sorted by reverse_lex_less; element 0 is zero.
std::vector<MultiIndex> reverse_lex_enumerate(const std::vector<int>& nu);
std::vector<MultiIndex> reverse_lex_enumerate(const MultiplicityVector& nu);

}  // namespace hz
