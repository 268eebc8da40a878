#pragma once

#include <vector>

namespace hz {

// Dense univariate polynomial, coefficients in ascending powers. Degree is
// len(coeffs) - 1; differentiation is symbolic on coefficients.
class Polynomial1D {
 public:
  Polynomial1D() : c_{0.0} {}
  explicit Polynomial1D(std::vector<double> coeffs);
  static Polynomial1D constant(double v);
  static Polynomial1D linear(double c0, double c1);  // c0 + c1*x

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double x) const;
  Polynomial1D derivative() const;
  Polynomial1D derivative(int order) const;
  Polynomial1D operator*(const Polynomial1D& o) const;
  Polynomial1D operator+(const Polynomial1D& o) const;
  Polynomial1D scaled(double s) const;
  Polynomial1D pow(int e) const;

 private:
  std::vector<double> c_;  // never empty
};

}  // namespace hz
