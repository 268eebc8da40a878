#include "hz/hermite_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace hz {

Series Series::one(int order) {
  Series s(order);
  s.c_[0] = 1.0;
  return s;
}

Series Series::affine(double c0, double c1, int order) {
  Series s(order);
  s.c_[0] = c0;
  if (order >= 1) s.c_[1] = c1;
  return s;
}

Series Series::mul(const Series& o) const {
  const int n = order();
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[i] == 0.0) continue;
    for (int j = 0; i + j <= n && j <= o.order(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

Series Series::scaled(double s) const {
  Series r = *this;
  for (double& v : r.c_) v *= s;
  return r;
}

Series Series::shifted_up(int k) const {
  Series r(order());
  for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

static void check_axis(const std::vector<double>& axis_nodes) {
  for (size_t i = 1; i < axis_nodes.size(); ++i)
    if (!(axis_nodes[i - 1] < axis_nodes[i]))
      throw std::invalid_argument("axis nodes must be strictly increasing");
}

Polynomial1D univariate_basis(const std::vector<double>& axis_nodes, int a_index, int nu) {
  if (nu < 1) throw std::invalid_argument("multiplicity must be >= 1");
  std::vector<int> per_node(axis_nodes.size(), nu);
  return univariate_basis_general(axis_nodes, per_node, a_index);
}

Polynomial1D univariate_basis_general(const std::vector<double>& axis_nodes,
                                      const std::vector<int>& nu_per_node, int a_index) {
  check_axis(axis_nodes);
  const double a = axis_nodes.at(a_index);
  Polynomial1D p = Polynomial1D::constant(1.0);
  for (size_t c = 0; c < axis_nodes.size(); ++c) {
    if (static_cast<int>(c) == a_index) continue;
    const double node = axis_nodes[c];
    Polynomial1D factor = Polynomial1D::linear(-node / (a - node), 1.0 / (a - node));
    p = p * factor.pow(nu_per_node.at(c));
  }
  return p;
}

Series univariate_basis_series(const std::vector<double>& axis_nodes,
                               const std::vector<int>& nu_per_node, int a_index, double x0,
                               int order) {
  check_axis(axis_nodes);
  const double a = axis_nodes.at(a_index);
  Series s = Series::one(order);
  for (size_t c = 0; c < axis_nodes.size(); ++c) {
    if (static_cast<int>(c) == a_index) continue;
    const double node = axis_nodes[c];
    // ((x0 - node) + u) / (a - node) around u = x - x0; the leading
    // coefficient is exactly 0.0 when x0 coincides with the node.
    Series factor = Series::affine((x0 - node) / (a - node), 1.0 / (a - node), order);
    for (int t = 0; t < nu_per_node.at(c); ++t) s = s.mul(factor);
  }
  return s;
}

Series axis_basis_series(const std::vector<double>& axis_nodes,
                         const std::vector<int>& nu_per_node, int a_index, int k, double x0,
                         int order) {
  const double a = axis_nodes.at(a_index);
  Series h = univariate_basis_series(axis_nodes, nu_per_node, a_index, x0, order);
  if (k == 0) return h;
  Series mono = Series::one(order);
  if (x0 == a) {
    // (x - a)^k is exactly u^k: a pure shift keeps low-order zeros structural.
    mono = mono.shifted_up(k);
    if (k > order) return Series(order);  // all truncated away
  } else {
    Series base = Series::affine(x0 - a, 1.0, order);
    for (int t = 0; t < k; ++t) mono = mono.mul(base);
  }
  return h.mul(mono).scaled(1.0 / factorial(k));
}

double axis_basis_eval(const std::vector<double>& axis_nodes, const std::vector<int>& nu_per_node,
                       int a_index, int k, double x) {
  check_axis(axis_nodes);
  const double a = axis_nodes.at(a_index);
  double v = 1.0;
  for (size_t c = 0; c < axis_nodes.size(); ++c) {
    if (static_cast<int>(c) == a_index) continue;
    const double node = axis_nodes[c];
    const double base = (x - node) / (a - node);
    for (int t = 0; t < nu_per_node.at(c); ++t) v *= base;
  }
  if (k > 0) {
    double mono = 1.0;
    for (int t = 0; t < k; ++t) mono *= (x - a);
    v *= mono / factorial(k);
  }
  return v;
}

std::vector<int> axis_multiplicities(const RectilinearGrid& grid, const MultiplicityVector& nu,
                                     int axis) {
  const size_t n = grid.axes.at(axis).size();
  std::vector<int> out(n);
  for (size_t node = 0; node < n; ++node) out[node] = nu.at(axis, static_cast<int>(node));
  return out;
}

double HermiteBasisFn::eval(const std::vector<double>& x) const {
  double v = 1.0;
  for (size_t ax = 0; ax < factors.size(); ++ax) v *= factors[ax].eval(x[ax]);
  return v;
}

double HermiteBasisFn::partial_at(const MultiIndex& m, const std::vector<double>& x) const {
  double v = 1.0;
  for (size_t ax = 0; ax < factors.size(); ++ax) v *= factors[ax].derivative(m[ax]).eval(x[ax]);
  return v;
}

HermiteBasisFn hermite_basis(const RectilinearGrid& grid, const std::vector<int>& a_idx,
                             const MultiIndex& k, const MultiplicityVector& nu) {
  grid.validate();
  HermiteBasisFn fn;
  fn.k = k;
  fn.anchor = grid.coords(a_idx);
  for (int ax = 0; ax < grid.dim(); ++ax) {
    const int nu_a = nu.at(ax, a_idx[ax]);
    if (k[ax] < 0 || k[ax] >= nu_a) throw std::out_of_range("derivative order outside 0..nu-1");
    const auto per_node = axis_multiplicities(grid, nu, ax);
    Polynomial1D h = univariate_basis_general(grid.axes[ax], per_node, a_idx[ax]);
    const double a = fn.anchor[ax];
    Polynomial1D mono = Polynomial1D::linear(-a, 1.0).pow(k[ax]).scaled(1.0 / factorial(k[ax]));
    fn.factors.push_back(mono * h);
  }
  return fn;
}

double basis_partial_at_node(const RectilinearGrid& grid, const MultiplicityVector& nu,
                             const std::vector<int>& a_idx, const MultiIndex& k,
                             const std::vector<int>& b_idx, const MultiIndex& m) {
  double v = 1.0;
  for (int ax = 0; ax < grid.dim(); ++ax) {
    const auto per_node = axis_multiplicities(grid, nu, ax);
    const double x0 = grid.axes[ax][b_idx[ax]];
    Series s = axis_basis_series(grid.axes[ax], per_node, a_idx[ax], k[ax], x0, m[ax]);
    v *= factorial(m[ax]) * s[m[ax]];
  }
  return v;
}

double basis_eval_factored(const RectilinearGrid& grid, const MultiplicityVector& nu,
                           const std::vector<int>& a_idx, const MultiIndex& k,
                           const std::vector<double>& x) {
  double v = 1.0;
  for (int ax = 0; ax < grid.dim(); ++ax) {
    const auto per_node = axis_multiplicities(grid, nu, ax);
    v *= axis_basis_eval(grid.axes[ax], per_node, a_idx[ax], k[ax], x[ax]);
  }
  return v;
}

}  // namespace hz
