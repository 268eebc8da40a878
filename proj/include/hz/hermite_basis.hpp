#pragma once

#include <vector>

#include "hz/grid.hpp"
#include "hz/multi_index.hpp"
#include "hz/polynomial.hpp"

namespace hz {

// Truncated Taylor series around a fixed expansion point; coefficient i is
// f^(i)(x0)/i!. Products are truncated at the common order. Leading structural
// zeros stay exactly 0.0, which is what keeps node derivatives exact.
class Series {
 public:
  explicit Series(int order) : c_(order + 1, 0.0) {}
  static Series one(int order);
  // c0 + u as a series in u = x - x0.
  static Series affine(double c0, double c1, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double& operator[](int i) { return c_[i]; }
  double operator[](int i) const { return c_[i]; }

  Series mul(const Series& o) const;
  Series scaled(double s) const;
  // Multiply by u^k (shift coefficients up by k).
  Series shifted_up(int k) const;

 private:
  std::vector<double> c_;
};

// Expanded-coefficient univariate factor H_a: product over other nodes c of
// ((x - c)/(a - c))^nu, value 1 at node a, zeros of multiplicity nu elsewhere.
Polynomial1D univariate_basis(const std::vector<double>& axis_nodes, int a_index, int nu);

// General (per-node multiplicity) variant: the factor for node c is raised to
// nu_per_node[c], the multiplicity of the annihilated node.
Polynomial1D univariate_basis_general(const std::vector<double>& axis_nodes,
                                      const std::vector<int>& nu_per_node, int a_index);

// Series of the univariate factor H_a around x0, truncated at `order`.
Series univariate_basis_series(const std::vector<double>& axis_nodes,
                               const std::vector<int>& nu_per_node, int a_index, double x0,
                               int order);

// Series around x0 of the full axis factor (x - a)^k / k! * H_a(x).
Series axis_basis_series(const std::vector<double>& axis_nodes,
                         const std::vector<int>& nu_per_node, int a_index, int k, double x0,
                         int order);

// Value of the axis factor at x, evaluated in factored form (exact zeros at
// foreign nodes, exact 1 for k = 0 at the home node).
double axis_basis_eval(const std::vector<double>& axis_nodes, const std::vector<int>& nu_per_node,
                       int a_index, int k, double x);

// Multivariate basis function H_(a,k) with expanded coefficients: one
// polynomial factor per axis. Supports evaluation and symbolic partial
// differentiation. The exact factored paths below are used wherever rounding
// at the 1e-12 level matters.
struct HermiteBasisFn {
  std::vector<Polynomial1D> factors;
  std::vector<double> anchor;
  MultiIndex k;

  double eval(const std::vector<double>& x) const;
  double partial_at(const MultiIndex& m, const std::vector<double>& x) const;
};

HermiteBasisFn hermite_basis(const RectilinearGrid& grid, const std::vector<int>& a_idx,
                             const MultiIndex& k, const MultiplicityVector& nu);

// Per-node multiplicities along one axis under either MultiplicityVector mode.
std::vector<int> axis_multiplicities(const RectilinearGrid& grid, const MultiplicityVector& nu,
                                     int axis);

// d^m H_(a,k) evaluated at grid node b, factored-series arithmetic.
double basis_partial_at_node(const RectilinearGrid& grid, const MultiplicityVector& nu,
                             const std::vector<int>& a_idx, const MultiIndex& k,
                             const std::vector<int>& b_idx, const MultiIndex& m);

// H_(a,k)(x) in factored form.
double basis_eval_factored(const RectilinearGrid& grid, const MultiplicityVector& nu,
                           const std::vector<int>& a_idx, const MultiIndex& k,
                           const std::vector<double>& x);

double factorial(int n);

}  // namespace hz
