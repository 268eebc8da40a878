#include "hz/compact.hpp"

#include <cmath>
#include <stdexcept>

#include "hz/hermite_basis.hpp"
#include "hz/linalg.hpp"
#include "hz/threads.hpp"

namespace hz {

namespace {

// Factor z^2 Q(z) (palindromic quartic) into reciprocal real pole pairs via
// the substitution y = z + 1/z; returns the two poles inside the unit circle
// and the gain making Q(z) = gain * (1 - p1/z)(1 - p1 z)(1 - p2/z)(1 - p2 z).
void factor_q(const std::vector<double>& Q, double poles[2], double* gain) {
  const double q1 = Q[1], q2 = Q[0];
  // q2 (y^2 - 2) + q1 y + 1 = 0
  const double a = q2, b = q1, c = 1.0 - 2.0 * q2;
  const double disc = b * b - 4.0 * a * c;
  if (disc <= 0.0) throw std::runtime_error("compact scheme has no real pole factorization");
  const double y[2] = {(-b + std::sqrt(disc)) / (2.0 * a), (-b - std::sqrt(disc)) / (2.0 * a)};
  for (int i = 0; i < 2; ++i) {
    const double d = y[i] * y[i] - 4.0;
    if (d <= 0.0) throw std::runtime_error("compact scheme pole pair off the real axis");
    const double z1 = (y[i] + std::sqrt(d)) / 2.0;
    const double z2 = (y[i] - std::sqrt(d)) / 2.0;
    const double p = std::fabs(z1) < 1.0 ? z1 : z2;
    if (std::fabs(p) >= 1.0) throw std::runtime_error("compact scheme pole on the unit circle");
    poles[i] = p;
  }
  *gain = q2 / (poles[0] * poles[1]);
}

// Moment condition: sum_j Q[j] * d-th derivative of x^p at j = sum_m R[m] m^p.
double moment(int p, int m) {
  double v = 1.0;
  for (int e = 0; e < p; ++e) v *= m;
  return v;
}

}  // namespace

CompactScheme derive_compact_scheme() {
  CompactScheme s;
  {
    // First derivative: unknowns (q1, q2, r1, r2, r3) with Q = [q2 q1 1 q1 q2]
    // and R antisymmetric [-r3 -r2 -r1 0 r1 r2 r3]; odd moments p = 1..9.
    DenseMatrix A(5, 5);
    std::vector<double> rhs(5, 0.0);
    for (int row = 0; row < 5; ++row) {
      const int p = 2 * row + 1;
      // d/dx x^p sampled at j: p * j^(p-1); Q center contributes only at p=1.
      A.at(row, 0) = p * (moment(p - 1, 1) + moment(p - 1, -1));   // q1
      A.at(row, 1) = p * (moment(p - 1, 2) + moment(p - 1, -2));   // q2
      A.at(row, 2) = -(moment(p, 1) - moment(p, -1));              // r1
      A.at(row, 3) = -(moment(p, 2) - moment(p, -2));              // r2
      A.at(row, 4) = -(moment(p, 3) - moment(p, -3));              // r3
    }
    // Q center tap: first derivative of x^p at 0 is nonzero only for p=1.
    rhs[0] = -1.0;
    auto u = lu_solve(std::move(A), std::move(rhs));
    s.Q1 = {u[1], u[0], 1.0, u[0], u[1]};
    s.R1 = {-u[4], -u[3], -u[2], 0.0, u[2], u[3], u[4]};
    factor_q(s.Q1, s.poles1, &s.gain1);
  }
  {
    // Second derivative: unknowns (q1, q2, r0, r1, r2, r3) with symmetric R;
    // even moments p = 0..10.
    DenseMatrix A(6, 6);
    std::vector<double> rhs(6, 0.0);
    for (int row = 0; row < 6; ++row) {
      const int p = 2 * row;
      const double pp1 = p * (p - 1);
      A.at(row, 0) = pp1 * (moment(p - 2, 1) + moment(p - 2, -1));  // q1
      A.at(row, 1) = pp1 * (moment(p - 2, 2) + moment(p - 2, -2));  // q2
      A.at(row, 2) = -moment(p, 0);                                 // r0
      A.at(row, 3) = -(moment(p, 1) + moment(p, -1));               // r1
      A.at(row, 4) = -(moment(p, 2) + moment(p, -2));               // r2
      A.at(row, 5) = -(moment(p, 3) + moment(p, -3));               // r3
      // Q center tap: second derivative of x^p at 0 is nonzero only for p=2.
      rhs[row] = -(p == 2 ? 2.0 : 0.0);
    }
    auto u = lu_solve(std::move(A), std::move(rhs));
    s.Q2 = {u[1], u[0], 1.0, u[0], u[1]};
    s.R2 = {u[5], u[4], u[3], u[2], u[3], u[4], u[5]};
    factor_q(s.Q2, s.poles2, &s.gain2);
  }
  return s;
}

namespace {

// The right-hand side R * x extends the line by point reflection through the
// edge values (x[-t] = 2 x[0] - x[t]), which continues constants and linear
// ramps exactly, so their derivatives stay exact up to the borders. One
// reflection level suffices: |taps| <= 7 and lines have >= 8 samples.
std::vector<double> correlate_line_rhs(const std::vector<double>& x,
                                       const std::vector<double>& taps, int anchor) {
  const long n = static_cast<long>(x.size());
  auto at = [&](long i) {
    if (i < 0) return 2.0 * x[0] - x[-i];
    if (i >= n) return 2.0 * x[n - 1] - x[2 * (n - 1) - i];
    return x[i];
  };
  std::vector<double> out(n, 0.0);
  for (long i = 0; i < n; ++i) {
    double s = 0.0;
    for (size_t u = 0; u < taps.size(); ++u)
      if (taps[u] != 0.0) s += taps[u] * at(i + static_cast<long>(u) - anchor);
    out[i] = s;
  }
  return out;
}

}  // namespace

void pole_pair_pass(std::vector<double>& x, double p) {
  const long n = static_cast<long>(x.size());
  const int horizon =
      static_cast<int>(std::ceil(std::log(1e-17) / std::log(std::fabs(p))));
  double u0 = x[0];
  double pm = 1.0;
  for (int m = 1; m <= horizon; ++m) {
    pm *= p;
    u0 += pm * x[mirror_index(m, n)];
  }
  const double x_last = x[n - 1];
  x[0] = u0;
  for (long k = 1; k < n; ++k) x[k] += p * x[k - 1];
  // Anti-causal init: y[n-1] = (2 u[n-1] - x[n-1]) / (1 - p^2), from summing
  // the causal output over the mirror extension about the last sample.
  x[n - 1] = (2.0 * x[n - 1] - x_last) / (1.0 - p * p);
  for (long k = n - 2; k >= 0; --k) x[k] += p * x[k + 1];
}

std::vector<double> apply_compact_line(const std::vector<double>& x, const CompactScheme& s,
                                       int order) {
  if (x.size() < 8) throw std::invalid_argument("line shorter than 8 samples");
  const std::vector<double>& R = (order == 1) ? s.R1 : s.R2;
  const double* poles = (order == 1) ? s.poles1 : s.poles2;
  const double gain = (order == 1) ? s.gain1 : s.gain2;
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  std::vector<double> y = correlate_line_rhs(x, R, 3);
  pole_pair_pass(y, poles[0]);
  pole_pair_pass(y, poles[1]);
  for (double& v : y) v /= gain;
  return y;
}

std::vector<double> apply_compact_line_banded(const std::vector<double>& x,
                                              const CompactScheme& s, int order) {
  if (x.size() < 8) throw std::invalid_argument("line shorter than 8 samples");
  const std::vector<double>& Q = (order == 1) ? s.Q1 : s.Q2;
  const std::vector<double>& R = (order == 1) ? s.R1 : s.R2;
  const long n = static_cast<long>(x.size());
  DenseMatrix A(static_cast<int>(n), static_cast<int>(n));
  for (long i = 0; i < n; ++i)
    for (int j = -2; j <= 2; ++j)
      A.at(static_cast<int>(i), static_cast<int>(mirror_index(i + j, n))) += Q[j + 2];
  return lu_solve(std::move(A), correlate_line_rhs(x, R, 3));
}

ImagePlane apply_compact(const ImagePlane& img, const CompactScheme& s, int axis, int order) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
  const int extent = axis == 0 ? img.h : img.w;
  if (extent < 8) throw std::invalid_argument("image extent < 8 along filtered axis");
  ImagePlane out(img.h, img.w);
  const long lines = axis == 0 ? img.w : img.h;
  const long work = static_cast<long>(img.h) * img.w * 16;
  parallel_for(lines, work, [&](long begin, long end) {
    std::vector<double> line(extent);
    for (long l = begin; l < end; ++l) {
      for (int t = 0; t < extent; ++t)
        line[t] = axis == 0 ? img.at(t, static_cast<int>(l)) : img.at(static_cast<int>(l), t);
      std::vector<double> d = apply_compact_line(line, s, order);
      for (int t = 0; t < extent; ++t) {
        if (axis == 0)
          out.at(t, static_cast<int>(l)) = d[t];
        else
          out.at(static_cast<int>(l), t) = d[t];
      }
    }
  });
  return out;
}

}  // namespace hz
