#include <cmath>

#include "doctest.h"
#include "hz/deriv_stack.hpp"

using namespace hz;

TEST_CASE("mode names round-trip") {
  for (DerivMode m : {DerivMode::Exact, DerivMode::FIR3, DerivMode::FIR5, DerivMode::FIR7,
                      DerivMode::IIR})
    CHECK(parse_deriv_mode(deriv_mode_name(m)) == m);
  CHECK(fir_length(DerivMode::FIR5) == 5);
  CHECK(fir_length(DerivMode::IIR) == 0);
  CHECK_THROWS(parse_deriv_mode("fir9"));
}

TEST_CASE("multiplicity one produces only the image plane") {
  ImagePlane img(12, 9);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 9; ++j) img.at(i, j) = i * 13.0 + j;
  DerivativeStack s = derivative_stack(img, {1, 1}, DerivMode::FIR5);
  REQUIRE(s.planes.size() == 1);
  CHECK(s.channels == std::vector<MultiIndex>{{0, 0}});
  CHECK(s.planes[0].px == img.px);
}

TEST_CASE("nine planes in reverse-lex order for nu=(3,3)") {
  ImagePlane img(16, 16, 1.0);
  DerivativeStack s = derivative_stack(img, {3, 3}, DerivMode::FIR3);
  REQUIRE(s.planes.size() == 9);
  const std::vector<MultiIndex> want = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1},
                                        {2, 0}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(s.channels == want);
  CHECK(s.planes[0].px == img.px);
  // Derivatives of a constant image vanish everywhere.
  for (size_t c = 1; c < s.planes.size(); ++c)
    for (double v : s.planes[c].px) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("FIR planes differentiate polynomials exactly in the interior") {
  const int n = 24;
  ImagePlane img(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) img.at(i, j) = double(i) * i * j + 2.0 * j * j;
  DerivativeStack s = derivative_stack(img, {3, 3}, DerivMode::FIR5);
  REQUIRE(s.channels[4] == MultiIndex{1, 1});
  REQUIRE(s.channels[5] == MultiIndex{2, 0});
  for (int i = 3; i < n - 3; ++i)
    for (int j = 3; j < n - 3; ++j) {
      CHECK(s.planes[4].at(i, j) == doctest::Approx(2.0 * i).epsilon(1e-9));  // d2/didj
      CHECK(s.planes[5].at(i, j) == doctest::Approx(2.0 * j).epsilon(1e-9));  // d2/di2
    }
}

TEST_CASE("IIR planes keep ramps exact to the borders") {
  const int n = 20;
  ImagePlane img(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) img.at(i, j) = 5.0 + 2.0 * i - 3.0 * j;
  DerivativeStack s = derivative_stack(img, {2, 2}, DerivMode::IIR);
  REQUIRE(s.channels[1] == MultiIndex{0, 1});
  REQUIRE(s.channels[2] == MultiIndex{1, 0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(s.planes[1].at(i, j) == doctest::Approx(-3.0).epsilon(1e-9));
      CHECK(s.planes[2].at(i, j) == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("boundary parity flag follows the mode") {
  ImagePlane img(16, 16, 3.0);
  CHECK(derivative_stack(img, {2, 2}, DerivMode::FIR3).parity_mirror);
  CHECK(derivative_stack(img, {2, 2}, DerivMode::FIR7).parity_mirror);
  CHECK(!derivative_stack(img, {2, 2}, DerivMode::IIR).parity_mirror);
}

TEST_CASE("exact mode requires caller-supplied planes") {
  ImagePlane img(16, 16, 0.0);
  CHECK_THROWS(derivative_stack(img, {2, 2}, DerivMode::Exact));
  CHECK_THROWS(derivative_stack(img, {2}, DerivMode::FIR3));  // stacks are 2D
}
