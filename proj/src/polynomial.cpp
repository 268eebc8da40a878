#include "hz/polynomial.hpp"

#include <stdexcept>

namespace hz {

Polynomial1D::Polynomial1D(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
}

Polynomial1D Polynomial1D::constant(double v) { return Polynomial1D({v}); }

Polynomial1D Polynomial1D::linear(double c0, double c1) { return Polynomial1D({c0, c1}); }

double Polynomial1D::eval(double x) const {
  double v = 0.0;
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

Polynomial1D Polynomial1D::derivative() const {
  if (c_.size() == 1) return constant(0.0);
  std::vector<double> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
  return Polynomial1D(std::move(d));
}

Polynomial1D Polynomial1D::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  Polynomial1D p = *this;
  for (int i = 0; i < order; ++i) p = p.derivative();
  return p;
}

Polynomial1D Polynomial1D::operator*(const Polynomial1D& o) const {
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial1D(std::move(r));
}

Polynomial1D Polynomial1D::operator+(const Polynomial1D& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial1D(std::move(r));
}

Polynomial1D Polynomial1D::scaled(double s) const {
  std::vector<double> r = c_;
  for (double& v : r) v *= s;
  return Polynomial1D(std::move(r));
}

Polynomial1D Polynomial1D::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial1D r = constant(1.0);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

}  // namespace hz
