#include <cmath>

#include "doctest.h"
#include "hz/polynomial.hpp"

using namespace hz;

TEST_CASE("evaluation is Horner-exact on small integer coefficients") {
  Polynomial1D p({1.0, -2.0, 3.0});  // 1 - 2x + 3x^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(0.0) == 1.0);
  CHECK(p.eval(1.0) == 2.0);
  CHECK(p.eval(-2.0) == 17.0);
}

TEST_CASE("default polynomial is the zero constant") {
  Polynomial1D z;
  CHECK(z.degree() == 0);
  CHECK(z.eval(3.7) == 0.0);
}

TEST_CASE("symbolic derivative") {
  Polynomial1D p({5.0, 1.0, -4.0, 2.0});  // 5 + x - 4x^2 + 2x^3
  Polynomial1D d = p.derivative();        // 1 - 8x + 6x^2
  CHECK(d.coeffs() == std::vector<double>{1.0, -8.0, 6.0});
  CHECK(p.derivative(2).coeffs() == std::vector<double>{-8.0, 12.0});
  CHECK(p.derivative(3).coeffs() == std::vector<double>{12.0});
  // Differentiating past the degree gives the zero polynomial, not an error.
  CHECK(p.derivative(4).eval(1.0) == 0.0);
  CHECK(p.derivative(9).eval(-2.0) == 0.0);
}

TEST_CASE("product and sum") {
  Polynomial1D a({1.0, 1.0});   // 1 + x
  Polynomial1D b({1.0, -1.0});  // 1 - x
  CHECK((a * b).coeffs() == std::vector<double>{1.0, 0.0, -1.0});
  CHECK((a + b).coeffs() == std::vector<double>{2.0, 0.0});
  Polynomial1D c({0.0, 2.0, 1.0});
  for (double x : {-1.5, 0.0, 0.25, 3.0}) {
    CHECK((a * c).eval(x) == doctest::Approx(a.eval(x) * c.eval(x)).epsilon(1e-14));
    CHECK((a + c).eval(x) == doctest::Approx(a.eval(x) + c.eval(x)).epsilon(1e-14));
  }
}

TEST_CASE("scaling and powers") {
  Polynomial1D a({1.0, 2.0});
  CHECK(a.scaled(-3.0).coeffs() == std::vector<double>{-3.0, -6.0});
  CHECK(a.pow(0).coeffs() == std::vector<double>{1.0});
  CHECK(a.pow(1).coeffs() == a.coeffs());
  CHECK(a.pow(3).coeffs() == std::vector<double>{1.0, 6.0, 12.0, 8.0});
}

TEST_CASE("factories") {
  CHECK(Polynomial1D::constant(4.5).eval(100.0) == 4.5);
  Polynomial1D l = Polynomial1D::linear(2.0, -0.5);
  CHECK(l.eval(0.0) == 2.0);
  CHECK(l.eval(4.0) == 0.0);
}
