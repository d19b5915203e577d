#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library under test.

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/float128.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using boost::multiprecision::float128;

// log A from the hyperfactorial H(n) = prod k^k:
//   log H(n) - (n^2/2 + n/2 + 1/12) log n + n^2/4 -> log A
// with corrections in even powers of 1/n, removed by Richardson in h = 1/n^2.
inline float128 log_glaisher_hyperfactorial() {
  const int levels = 7;
  std::vector<float128> s(levels);
  for (int i = 0; i < levels; ++i) {
    const long n = 32L << i;
    float128 logh = 0;
    for (long k = 2; k <= n; ++k) logh += k * log(float128(k));
    const float128 fn = n;
    s[i] = logh - (fn * fn / 2 + fn / 2 + float128(1) / 12) * log(fn) + fn * fn / 4;
  }
  for (int j = 1; j < levels; ++j) {
    const float128 f = pow(float128(4), j);
    for (int i = levels - 1; i >= j; --i) s[i] = (f * s[i] - s[i - 1]) / (f - 1);
  }
  return s[levels - 1];
}

inline double zeta_prime_minus_one() { return static_cast<double>(float128(1) / 12 - log_glaisher_hyperfactorial()); }

// Laplace expansion along the first row; fine up to n ~ 8.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& a) {
  const size_t n = a.size();
  if (n == 0) return T(1);
  if (n == 1) return a[0][0];
  T sum = 0;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const T term = a[0][c] * cofactor_det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

// (1/2pi) int_{-pi}^{pi} f(theta) e^{-ik theta} d theta, adaptive on pieces
// split at the given break angles (jumps, kinks).
inline std::complex<double> fourier_coefficient(const std::function<std::complex<double>(double)>& f, long k,
                                                std::vector<double> breaks = {}) {
  using boost::math::quadrature::gauss_kronrod;
  const double pi = boost::math::constants::pi<double>();
  breaks.push_back(-pi);
  breaks.push_back(pi);
  std::sort(breaks.begin(), breaks.end());
  std::complex<double> total = 0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b - a < 1e-15) continue;
    auto re = [&](double t) { return (f(t) * std::polar(1.0, -k * t)).real(); };
    auto im = [&](double t) { return (f(t) * std::polar(1.0, -k * t)).imag(); };
    total += std::complex<double>(gauss_kronrod<double, 61>::integrate(re, a, b, 25, 1e-13),
                                  gauss_kronrod<double, 61>::integrate(im, a, b, 25, 1e-13));
  }
  return total / (2 * pi);
}

// log det(I - K_alpha) = -sum_j tr(K^j)/j for small alpha. tr K = alpha/pi,
// tr K^2 by nested quadrature; tr K^3 is replaced by (alpha/pi)^3, which is
// exact to O(alpha^5).
// Small-gap expansion of the gap probability in s = alpha/pi:
//   E(s) = 1 - s + pi^2 s^4/36 - pi^4 s^6/675 + pi^6 s^8/17640
// Returns log E and s d/ds log E (which equals alpha d/dalpha).
struct SmallGap {
  double logdet;
  double sigma;
};

inline SmallGap small_gap_series(double alpha) {
  const double pi = boost::math::constants::pi<double>();
  const double s = alpha / pi, p2 = pi * pi;
  const double c4 = p2 / 36, c6 = p2 * p2 / 675, c8 = p2 * p2 * p2 / 17640;
  const double e = 1 - s + c4 * std::pow(s, 4) - c6 * std::pow(s, 6) + c8 * std::pow(s, 8);
  const double de = -1 + 4 * c4 * std::pow(s, 3) - 6 * c6 * std::pow(s, 5) + 8 * c8 * std::pow(s, 7);
  return {std::log(e), s * de / e};
}

inline double small_gap_logdet(double alpha) { return small_gap_series(alpha).logdet; }

}  // namespace oracle
