#pragma once

#include <vector>

#include "hz/image.hpp"

namespace hz {

// Implicit derivative schemes Q * f^(d) = R * f for d = 1, 2, with 5-tap
// symmetric Q (center tap 1) and 7-tap R (antisymmetric for d = 1, symmetric
// for d = 2). Taps come from maximal-order Taylor moment matching; the Q
// transfer function factors into two reciprocal real pole pairs, enabling a
// stable causal/anti-causal recursive solve.
struct CompactScheme {
  std::vector<double> Q1, R1;  // first derivative
  std::vector<double> Q2, R2;  // second derivative
  double poles1[2], poles2[2];  // |p| < 1, real
  double gain1 = 1.0, gain2 = 1.0;  // Q(z) = gain * prod (1 - p/z)(1 - p*z)
};

CompactScheme derive_compact_scheme();

// One reciprocal pole pair 1 / ((1 - p/z)(1 - p z)) applied in place: causal
// then anti-causal recursion, whole-sample mirror initial conditions, |p| < 1.
// DC gain 1 / (1 - p)^2. Shared with the B-spline prefilter.
void pole_pair_pass(std::vector<double>& x, double p);

// Solves Q * y = R * x on one line via the recursive cascade. R * x extends
// the line by point reflection through the edge values (keeps constants and
// ramps exact to the borders); the implicit Q solve folds whole-sample
// symmetrically, which is also how the cascade's initial conditions read it.
std::vector<double> apply_compact_line(const std::vector<double>& x, const CompactScheme& s,
                                       int order);

// Oracle: dense solve of the same system, identical boundary model (same
// right-hand side, Q columns folded by whole-sample mirror).
std::vector<double> apply_compact_line_banded(const std::vector<double>& x,
                                              const CompactScheme& s, int order);

// Per-line application along the given axis (0 = rows vary, derivative along
// i; 1 = derivative along j). Requires extent >= 8 along that axis.
ImagePlane apply_compact(const ImagePlane& img, const CompactScheme& s, int axis, int order);

}  // namespace hz
