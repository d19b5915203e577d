#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "sinegap/errors.hpp"

namespace sinegap {

enum class ConstantName { zeta_prime_minus_one, log_glaisher, log_barnes_g_half, dyson_constant };

struct NamedConstant {
  ConstantName name;
  double value;
  std::string_view method;
};

inline constexpr std::array<ConstantName, 4> all_constants = {
    ConstantName::zeta_prime_minus_one, ConstantName::log_glaisher,
    ConstantName::log_barnes_g_half, ConstantName::dyson_constant};

inline std::string_view to_string(ConstantName c) {
  switch (c) {
    case ConstantName::zeta_prime_minus_one: return "zeta_prime_minus_one";
    case ConstantName::log_glaisher: return "log_glaisher";
    case ConstantName::log_barnes_g_half: return "log_barnes_g_half";
    case ConstantName::dyson_constant: return "dyson_constant";
  }
  return "?";
}

inline ConstantName parse_constant_name(std::string_view s) {
  for (ConstantName c : all_constants)
    if (to_string(c) == s) return c;
  throw UsageError("unknown constant '" + std::string(s) + "'");
}

namespace detail {

// zeta'(2) = -sum_{k>=1} log(k)/k^2. Direct sum to N-1, then Euler-Maclaurin
// for the tail of f(x) = x^{-2} log x. The m-th derivative is
//   (-1)^m (2)_m x^{-2-m} [log x - sum_{i<m} 1/(2+i)].
inline double zeta_prime_two() {
  constexpr int N = 40;
  long double sum = 0;
  for (int k = 2; k < N; ++k) sum += std::log((long double)k) / ((long double)k * k);
  const long double x = N, lx = std::log(x);
  sum += (lx + 1) / x;          // integral from N to infinity
  sum += 0.5L * lx / (x * x);   // f(N)/2
  for (int j = 1; j <= 10; ++j) {
    const int m = 2 * j - 1;
    long double rising = 1, harmonic = 0;
    for (int i = 0; i < m; ++i) {
      rising *= 2 + i;
      harmonic += 1.0L / (2 + i);
    }
    // (-1)^m with m odd
    const long double deriv = -rising * std::pow(x, -2.0L - m) * (lx - harmonic);
    long double fact = 1;
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    sum -= boost::math::bernoulli_b2n<long double>(j) / fact * deriv;
  }
  return static_cast<double>(-sum);
}

// log A = (gamma + log 2 pi)/12 - zeta'(2)/(2 pi^2)
inline double log_glaisher() {
  using boost::math::constants::euler;
  using boost::math::constants::pi;
  const double p = pi<double>();
  return (euler<double>() + std::log(2 * p)) / 12 - zeta_prime_two() / (2 * p * p);
}

// Taylor series of log G(1+z) about z = 0, evaluated at z = -1/2:
//   log G(1+z) = z log(2 pi)/2 - (z + (1+gamma) z^2)/2 + sum_{k>=2} (-1)^k zeta(k) z^{k+1}/(k+1)
inline double log_barnes_g_half() {
  using boost::math::constants::euler;
  using boost::math::constants::pi;
  const long double z = -0.5L;
  long double s = z * std::log(2 * pi<long double>()) / 2 - (z + (1 + euler<long double>()) * z * z) / 2;
  long double zp = z * z * z;  // z^{k+1} at k = 2
  for (int k = 2; k < 80; ++k) {
    const long double term = boost::math::zeta<long double>(k) * zp / (k + 1);
    s += (k % 2 == 0) ? term : -term;
    zp *= z;
  }
  return static_cast<double>(s);
}

}  // namespace detail

inline NamedConstant named_constant(ConstantName c) {
  static const double log_a = detail::log_glaisher();
  static const double zp = 1.0 / 12 - log_a;
  static const double log_g = detail::log_barnes_g_half();
  static const double dyson = std::log(2.0) / 12 + 3 * zp;
  switch (c) {
    case ConstantName::zeta_prime_minus_one: return {c, zp, "glaisher_relation"};
    case ConstantName::log_glaisher: return {c, log_a, "zeta_prime_two_euler_maclaurin"};
    case ConstantName::log_barnes_g_half: return {c, log_g, "log_gamma_taylor_series"};
    case ConstantName::dyson_constant: return {c, dyson, "log2_over_12_plus_3_zeta_prime"};
  }
  throw UsageError("unknown constant");
}

inline double constant(ConstantName c) { return named_constant(c).value; }
inline double constant(std::string_view name) { return constant(parse_constant_name(name)); }

struct ConstantRelation {
  std::string_view name;
  double residual;
};

// The Glaisher relation, the Barnes G(1/2) closed form
//   log G(1/2) = log(2)/24 + 1/8 - log(pi)/4 - (3/2) log A,
// and the definition of the gap constant. Only the second one compares
// independently computed values.
inline std::array<ConstantRelation, 3> constant_relations() {
  using boost::math::constants::pi;
  const double zp = constant(ConstantName::zeta_prime_minus_one);
  const double log_a = constant(ConstantName::log_glaisher);
  const double log_g = constant(ConstantName::log_barnes_g_half);
  const double dyson = constant(ConstantName::dyson_constant);
  return {{{"glaisher", log_a - (1.0 / 12 - zp)},
           {"barnes_g_half", log_g - (std::log(2.0) / 24 + 0.125 - std::log(pi<double>()) / 4 - 1.5 * log_a)},
           {"dyson", dyson - (std::log(2.0) / 12 + 3 * zp)}}};
}

}  // namespace sinegap
