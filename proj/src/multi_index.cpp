#include "hz/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hz {

int grade(const MultiIndex& k) {
  return std::accumulate(k.begin(), k.end(), 0);
}

bool leq_componentwise(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index arity mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool reverse_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index arity mismatch");
  int ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MultiplicityVector MultiplicityVector::constant(std::vector<int> nu) {
  MultiplicityVector m;
  m.nu = std::move(nu);
  m.validate();
  return m;
}

MultiplicityVector MultiplicityVector::per_node_mode(std::vector<std::vector<int>> values) {
  MultiplicityVector m;
  m.per_node = std::move(values);
  m.nu.clear();
  m.validate();
  return m;
}

int MultiplicityVector::dim() const {
  return constant_mode() ? static_cast<int>(nu.size()) : static_cast<int>(per_node.size());
}

int MultiplicityVector::at(int axis, int node) const {
  if (constant_mode()) return nu.at(axis);
  return per_node.at(axis).at(node);
}

long MultiplicityVector::cardinality() const {
  if (!constant_mode()) throw std::logic_error("cardinality requires constant multiplicities");
  long c = 1;
  for (int v : nu) c *= v;
  return c;
}

void MultiplicityVector::validate() const {
  if (constant_mode()) {
    if (nu.empty()) throw std::invalid_argument("empty multiplicity vector");
    for (int v : nu)
      if (v < 1) throw std::invalid_argument("multiplicity must be >= 1");
  } else {
    if (per_node.empty()) throw std::invalid_argument("empty multiplicity vector");
    for (const auto& axis : per_node) {
      if (axis.empty()) throw std::invalid_argument("axis with no multiplicities");
      for (int v : axis)
        if (v < 1) throw std::invalid_argument("multiplicity must be >= 1");
    }
  }
}

std::vector<MultiIndex> reverse_lex_enumerate(const std::vector<int>& nu) {
  for (int v : nu)
    if (v < 1) throw std::invalid_argument("multiplicity must be >= 1");
  long c = 1;
  for (int v : nu) c *= v;
  std::vector<MultiIndex> out;
  out.reserve(c);
  MultiIndex k(nu.size(), 0);
  for (long i = 0; i < c; ++i) {
    out.push_back(k);
    for (size_t ax = nu.size(); ax-- > 0;) {
      if (++k[ax] < nu[ax]) break;
      k[ax] = 0;
    }
  }
  std::sort(out.begin(), out.end(), reverse_lex_less);
  return out;
}

std::vector<MultiIndex> reverse_lex_enumerate(const MultiplicityVector& nu) {
  if (!nu.constant_mode()) throw std::logic_error("enumeration requires constant multiplicities");
  return reverse_lex_enumerate(nu.nu);
}

}  // namespace hz
