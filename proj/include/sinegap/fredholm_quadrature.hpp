#pragma once

#include <boost/math/constants/constants.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sinegap/errors.hpp"
#include "sinegap/log_det.hpp"
#include "sinegap/precision.hpp"
#include "sinegap/structured_linear.hpp"

namespace sinegap {

template <typename Real>
struct QuadratureRule {
  std::vector<Real> nodes;    // increasing
  std::vector<Real> weights;  // positive
};

// m-point Gauss-Legendre rule on [a, b]; nodes by Newton iteration on P_m.
template <typename Real>
QuadratureRule<Real> gauss_legendre(int m, Real a, Real b) {
  using std::abs;
  using std::cos;
  if (m < 1) throw UsageError("Gauss-Legendre rule needs m >= 1");
  const Real pi = boost::math::constants::pi<Real>();
  const Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<Real> x(static_cast<size_t>(m)), w(static_cast<size_t>(m));
  for (int i = 0; i < (m + 1) / 2; ++i) {
    Real z = cos(pi * (Real(i) + Real(0.75)) / (Real(m) + Real(0.5)));
    Real dp = 1;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = z;
      for (int k = 2; k <= m; ++k) {
        const Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const Real pm = (m == 1) ? z : p1;
      const Real pm1 = (m == 1) ? Real(1) : p0;
      dp = m * (z * pm - pm1) / (z * z - 1);
      const Real dz = pm / dp;
      z -= dz;
      if (abs(dz) <= 4 * eps) break;
    }
    // final derivative at the converged node
    Real p0 = 1, p1 = z;
    for (int k = 2; k <= m; ++k) {
      const Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (m == 1) ? Real(1) : Real(m * (z * p1 - p0) / (z * z - 1));
    const Real wt = 2 / ((1 - z * z) * dp * dp);
    x[i] = -z;
    x[m - 1 - i] = z;
    w[i] = w[m - 1 - i] = wt;
  }
  if (m % 2 == 1) x[m / 2] = 0;
  QuadratureRule<Real> r;
  r.nodes.resize(m);
  r.weights.resize(m);
  const Real half = (b - a) / 2;
  for (int i = 0; i < m; ++i) {
    r.nodes[i] = a + half * (1 + x[i]);
    r.weights[i] = half * w[i];
  }
  return r;
}

// Symmetrized Nystrom matrix I - W^{1/2} K W^{1/2} for the sine kernel on [0, alpha].
template <typename Real>
Mat<Real> nystrom_matrix(double alpha, int m) {
  using std::sin;
  using std::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  const QuadratureRule<Real> q = gauss_legendre<Real>(m, Real(0), Real(alpha));
  std::vector<Real> sw(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) sw[i] = sqrt(q.weights[i]);
  Mat<Real> A(m, m);
  for (int i = 0; i < m; ++i) {
    A(i, i) = 1 - q.weights[i] / pi;
    for (int j = 0; j < i; ++j) {
      const Real d = q.nodes[i] - q.nodes[j];
      const Real v = -sw[i] * sw[j] * sin(d) / (pi * d);
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

struct NystromResult {
  LogDetValue logdet;         // at the requested m
  int m = 0;
  int check_m = 0;            // the other level of the doubling check
  double doubling_delta = 0;  // |L(check_m) - L(m)|
  double rounding_floor = 0;  // first-order rounding bound, 0 if not needed
  double accepted_threshold = 0;
};

namespace detail {

template <typename Real>
LogDetValue nystrom_level(double alpha, int m, double* rounding_bound) {
  const Mat<Real> A = nystrom_matrix<Real>(alpha, m);
  Eigen::PartialPivLU<Mat<Real>> lu(A);
  if (rounding_bound) {
    // delta(log det) = tr(A^{-1} dA) with |dA| ~ m eps |A|
    const Mat<Real> inv = lu.inverse();
    *rounding_bound = to_double(inv.trace()) * m * to_double(std::numeric_limits<Real>::epsilon());
  }
  return log_det(lu);
}

template <typename Real>
NystromResult nystrom_estimate_impl(double alpha, int m) {
  NystromResult r;
  r.m = m;
  if (alpha == 0) {
    r.check_m = m;
    return r;
  }
  r.logdet = nystrom_level<Real>(alpha, m, nullptr);
  r.check_m = (2 * m <= 4096) ? 2 * m : m / 2;
  const LogDetValue other = nystrom_level<Real>(alpha, std::max(1, r.check_m), nullptr);
  r.doubling_delta = std::abs(other.log_abs - r.logdet.log_abs);
  r.accepted_threshold = 1e-12;
  if (r.doubling_delta > r.accepted_threshold) {
    double floor_m = 0, floor_other = 0;
    nystrom_level<Real>(alpha, m, &floor_m);
    nystrom_level<Real>(alpha, std::max(1, r.check_m), &floor_other);
    r.rounding_floor = floor_m + floor_other;
    r.accepted_threshold = std::max(1e-12, r.rounding_floor);
  }
  if (r.doubling_delta > r.accepted_threshold)
    throw AccuracyError("Nystrom m-doubling changed log det by " + std::to_string(r.doubling_delta) +
                            " (m = " + std::to_string(m) + ", alpha = " + std::to_string(alpha) + ")",
                        r.logdet.log_abs, other.log_abs);
  return r;
}

}  // namespace detail

inline NystromResult nystrom_estimate(double alpha, int m, Precision precision = Precision::binary64) {
  if (!(alpha >= 0) || !std::isfinite(alpha)) throw UsageError("nystrom needs alpha >= 0");
  if (m < 1 || m > 4096) throw UsageError("nystrom needs 1 <= m <= 4096");
  return precision == Precision::extended ? detail::nystrom_estimate_impl<Extended>(alpha, m)
                                          : detail::nystrom_estimate_impl<double>(alpha, m);
}

inline LogDetValue nystrom_logdet(double alpha, int m, Precision precision = Precision::binary64) {
  return nystrom_estimate(alpha, m, precision).logdet;
}

}  // namespace sinegap
