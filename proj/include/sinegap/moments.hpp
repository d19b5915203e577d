#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sinegap/errors.hpp"
#include "sinegap/precision.hpp"

namespace sinegap {

enum class MomentTag {
  smooth,             // f is b itself, regular on [-1,1]
  endpoint_sqrt,      // b(x) = f(x) sqrt((1+x)/(1-x)), f regular
  truncated_support,  // b(x) = f(x) on [-rho, rho], zero outside
};

template <typename Real = double>
struct MomentFunction {
  std::function<Real(Real)> f;
  MomentTag tag = MomentTag::smooth;
  Real rho = 1;

  static MomentFunction smooth(std::function<Real(Real)> g) { return {std::move(g), MomentTag::smooth, 1}; }
  static MomentFunction with_sqrt_weight(std::function<Real(Real)> g) {
    return {std::move(g), MomentTag::endpoint_sqrt, 1};
  }
  static MomentFunction truncated(std::function<Real(Real)> g, Real rho) {
    if (!(rho > 0 && rho <= 1)) throw UsageError("truncated support needs 0 < rho <= 1");
    return {std::move(g), MomentTag::truncated_support, rho};
  }

  Real operator()(Real x) const {
    using std::abs;
    using std::sqrt;
    switch (tag) {
      case MomentTag::smooth: return f(x);
      case MomentTag::endpoint_sqrt: return f(x) * sqrt((1 + x) / (1 - x));
      case MomentTag::truncated_support: return abs(x) <= rho ? f(x) : Real(0);
    }
    return Real(0);
  }
};

template <typename Real>
Real default_moment_tolerance() {
  return std::is_same_v<Real, double> ? Real(1e-13) : Real(1e-26);
}

// b_k = (1/pi) int_{-1}^{1} b(x) (2x)^{k-1} dx for k = 1..k_max; entry k-1 holds b_k.
// Adaptive Gauss-Kronrod (61 points) in theta with x = cos(theta) (x = rho
// cos(theta) on a truncated support). The substitution clusters nodes at the
// endpoints, where the weights here are singular or nearly so, and removes the
// square-root singularity exactly:
//   int f(x) sqrt((1+x)/(1-x)) (2x)^{k-1} dx = int_0^pi f(cos th) (1 + cos th) (2 cos th)^{k-1} dth.
template <typename Real>
std::vector<Real> moments(const MomentFunction<Real>& b, int k_max, Real rel_tol = default_moment_tolerance<Real>()) {
  using boost::math::quadrature::gauss_kronrod;
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  if (k_max < 1) throw UsageError("moments needs k_max >= 1");
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Real> out(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    Real err = 0, l1 = 0, val = 0;
    auto power = [k](Real y) { return pow(2 * y, k - 1); };
    switch (b.tag) {
      case MomentTag::smooth:
        val = gauss_kronrod<Real, 61>::integrate(
            [&](Real th) {
              const Real c = cos(th);
              return b.f(c) * sin(th) * power(c);
            },
            Real(0), pi, 30, rel_tol, &err, &l1);
        break;
      case MomentTag::truncated_support:
        val = gauss_kronrod<Real, 61>::integrate(
            [&](Real th) {
              const Real c = b.rho * cos(th);
              return b.f(c) * b.rho * sin(th) * power(c);
            },
            Real(0), pi, 30, rel_tol, &err, &l1);
        break;
      case MomentTag::endpoint_sqrt:
        val = gauss_kronrod<Real, 61>::integrate(
            [&](Real th) {
              const Real c = cos(th);
              return b.f(c) * (1 + c) * power(c);
            },
            Real(0), pi, 30, rel_tol, &err, &l1);
        break;
    }
    // accept up to 100x the requested tolerance; GK error estimates are pessimistic
    if (!(err <= 100 * rel_tol * l1 + std::numeric_limits<Real>::min()))
      throw AccuracyError("moment quadrature did not converge for k = " + std::to_string(k) +
                              " (error estimate " + std::to_string(to_double(err)) + ")",
                          to_double(val - err), to_double(val));
    out[k - 1] = val / pi;
  }
  return out;
}

}  // namespace sinegap
