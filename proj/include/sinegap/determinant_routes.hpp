#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sinegap/circle_symbols.hpp"
#include "sinegap/errors.hpp"
#include "sinegap/fourier.hpp"
#include "sinegap/fredholm_quadrature.hpp"
#include "sinegap/log_det.hpp"
#include "sinegap/moments.hpp"
#include "sinegap/precision.hpp"
#include "sinegap/special_constants.hpp"
#include "sinegap/structured_linear.hpp"
#include "sinegap/wiener_hopf.hpp"

namespace sinegap {

enum class Route { nystrom, toeplitz, hankel, resolvent, split, asymptotic };

inline constexpr std::array<Route, 6> all_routes = {Route::nystrom, Route::toeplitz, Route::hankel,
                                                    Route::resolvent, Route::split, Route::asymptotic};

inline std::string_view to_string(Route r) {
  switch (r) {
    case Route::nystrom: return "nystrom";
    case Route::toeplitz: return "toeplitz";
    case Route::hankel: return "hankel";
    case Route::resolvent: return "resolvent";
    case Route::split: return "split";
    case Route::asymptotic: return "asymptotic";
  }
  return "?";
}

inline Route parse_route(std::string_view s) {
  for (Route r : all_routes)
    if (to_string(r) == s) return r;
  throw UsageError("unknown route '" + std::string(s) + "'");
}

// Zero means "route default".
struct RouteParams {
  int n = 0;   // toeplitz: 512, hankel: 8, resolvent: max(8, ceil(16 alpha))
  long N = 0;  // resolvent: 16 n, split: 2048
  int m = 0;   // nystrom: 64
  Precision precision = Precision::binary64;
};

inline constexpr int hankel_ceiling(Precision p) { return p == Precision::extended ? 24 : 12; }

struct GapEstimate {
  double alpha = 0;
  Route route = Route::nystrom;
  std::map<std::string, double> params;
  LogDetValue logdet;
  double error_estimate = 0;  // infinite for the asymptotic route
};

namespace detail {

// log det T_n(chi_{alpha/n}) with chi_a the indicator of a < theta < 2 pi - a
template <typename Real>
double toeplitz_arc_logdet(double alpha, int n) {
  using std::sin;
  const Real pi = boost::math::constants::pi<Real>();
  const Real a = Real(alpha) / n;
  std::vector<Real> c(static_cast<size_t>(2 * n - 1));
  for (long k = -(n - 1); k <= n - 1; ++k)
    c[k + n - 1] = k == 0 ? Real(1) - a / pi : -sin(k * a) / (pi * k);
  return log_det(toeplitz_matrix(c, -(n - 1), n)).log_abs;
}

template <typename Real>
double hankel_route_logdet(double alpha, int n) {
  using std::log;
  using std::sqrt;
  const Real rho = cos(Real(alpha) / (2 * n));
  const auto b = MomentFunction<Real>::smooth([rho](Real x) { return sqrt((1 + rho * x) / (1 - rho * x)); });
  const Mat<Real> H = moment_hankel_matrix(moments(b, 2 * n - 1), n);
  return to_double(Real(n) * n * log(rho)) + log_det(H).log_abs;
}

inline double toeplitz_level(double alpha, int n, Precision p) {
  return p == Precision::extended ? toeplitz_arc_logdet<Extended>(alpha, n) : toeplitz_arc_logdet<double>(alpha, n);
}

inline double hankel_level(double alpha, int n, Precision p) {
  return p == Precision::extended ? hankel_route_logdet<Extended>(alpha, n) : hankel_route_logdet<double>(alpha, n);
}

}  // namespace detail

inline double asymptotic_logdet(double alpha) {
  if (!(alpha > 0)) throw DomainError("the asymptotic formula needs alpha > 0");
  const double beta = alpha / 2;
  return -beta * beta / 2 - std::log(beta) / 4 + constant(ConstantName::dyson_constant);
}

inline GapEstimate gap_logdet(double alpha, Route route, const RouteParams& rp = {}) {
  if (!std::isfinite(alpha) || alpha < 0) throw UsageError("alpha must be finite and >= 0");
  if (rp.precision == Precision::extended &&
      !(route == Route::nystrom || route == Route::toeplitz || route == Route::hankel))
    throw UsageError("extended precision is only available for the nystrom, toeplitz and hankel routes");
  GapEstimate g;
  g.alpha = alpha;
  g.route = route;
  g.params["precision_extended"] = rp.precision == Precision::extended ? 1 : 0;

  if (route == Route::asymptotic) {
    g.logdet = real_log(asymptotic_logdet(alpha));
    g.error_estimate = std::numeric_limits<double>::infinity();
    return g;
  }

  switch (route) {
    case Route::nystrom: {
      const int m = rp.m > 0 ? rp.m : 64;
      g.params["m"] = m;
      if (alpha == 0) return g;
      const NystromResult r = nystrom_estimate(alpha, m, rp.precision);
      g.params["check_m"] = r.check_m;
      g.logdet = r.logdet;
      g.error_estimate = std::max(r.doubling_delta, r.rounding_floor);
      return g;
    }
    case Route::toeplitz: {
      const int n = rp.n > 0 ? rp.n : 512;
      if (n < 4) throw UsageError("toeplitz route needs n >= 4");
      g.params["n"] = n;
      if (alpha == 0) return g;
      // levels n/2, n, 2n; the error decays like n^-2 (checked by the observed order)
      const double l0 = detail::toeplitz_level(alpha, n / 2, rp.precision);
      const double l1 = detail::toeplitz_level(alpha, n, rp.precision);
      const double l2 = detail::toeplitz_level(alpha, 2 * n, rp.precision);
      const double r_coarse = l1 + (l1 - l0) / 3;
      const double r_fine = l2 + (l2 - l1) / 3;
      g.params["richardson_order"] = 2;
      g.params["observed_order"] = (l1 != l2 && l0 != l1) ? std::log2(std::abs((l1 - l0) / (l2 - l1))) : 0.0;
      g.logdet = real_log(r_fine);
      g.error_estimate = std::max(std::abs(l2 - l1) / 3, std::abs(r_fine - r_coarse));
      return g;
    }
    case Route::hankel: {
      const int n = rp.n > 0 ? rp.n : 8;
      const int ceiling = hankel_ceiling(rp.precision);
      if (n < 2 || n > ceiling)
        throw UsageError("hankel route needs 2 <= n <= " + std::to_string(ceiling) + " at " +
                         std::string(to_string(rp.precision)) + " precision");
      g.params["n"] = n;
      if (alpha == 0) return g;
      mu_rho_params(alpha, n / 2);  // domain check for both levels
      const double l_half = detail::hankel_level(alpha, n / 2, rp.precision);
      const double l = detail::hankel_level(alpha, n, rp.precision);
      g.logdet = real_log(l);
      g.error_estimate = std::abs(l - l_half);
      return g;
    }
    case Route::resolvent: {
      const int n = rp.n > 0 ? rp.n : std::max(8, static_cast<int>(std::ceil(16 * alpha)));
      const long N = rp.N > 0 ? rp.N : 16L * n;
      g.params["n"] = n;
      g.params["N"] = static_cast<double>(N);
      if (alpha == 0) return g;
      const SectionResult s = finite_section_resolvent_corner(CircleSymbol::psi_full(alpha, n), n, N);
      g.params["error_order"] = s.error_order;
      g.logdet = real_log(-alpha * alpha / 8) + s.extrapolated_logdet;
      g.error_estimate = s.error_estimate;
      return g;
    }
    case Route::split: {
      const long N = rp.N > 0 ? rp.N : 2048;
      g.params["N"] = static_cast<double>(N);
      if (alpha == 0) return g;
      const SplitResult plus = complemented_split_det(alpha / 2, SplitBranch::plus_minus_half, N);
      const SplitResult minus = complemented_split_det(alpha / 2, SplitBranch::minus_plus_half, N);
      g.params["projection_defect"] = plus.projection_defect;
      g.logdet = real_log(-alpha * alpha / 8) + plus.logdet + minus.logdet;
      g.error_estimate = plus.error_estimate + minus.error_estimate;
      return g;
    }
    case Route::asymptotic: break;
  }
  return g;
}

// ---- identity residuals -----------------------------------------------------

enum class Identity { prop21_BO, prop23, prop32, prop33, f64, block_tab };

inline constexpr std::array<Identity, 6> all_identities = {Identity::prop21_BO, Identity::prop23, Identity::prop32,
                                                           Identity::prop33,    Identity::f64,    Identity::block_tab};

inline std::string_view to_string(Identity w) {
  switch (w) {
    case Identity::prop21_BO: return "prop21_BO";
    case Identity::prop23: return "prop23";
    case Identity::prop32: return "prop32";
    case Identity::prop33: return "prop33";
    case Identity::f64: return "f64";
    case Identity::block_tab: return "block_tab";
  }
  return "?";
}

inline Identity parse_identity(std::string_view s) {
  for (Identity w : all_identities)
    if (to_string(w) == s) return w;
  throw UsageError("unknown identity '" + std::string(s) + "'");
}

enum class TestSymbol { smooth_cosine, rational_even, constant_one, even_polynomial, arc };

inline constexpr std::array<TestSymbol, 5> all_test_symbols = {TestSymbol::smooth_cosine, TestSymbol::rational_even,
                                                               TestSymbol::constant_one, TestSymbol::even_polynomial,
                                                               TestSymbol::arc};

inline std::string_view to_string(TestSymbol s) {
  switch (s) {
    case TestSymbol::smooth_cosine: return "smooth_cosine";
    case TestSymbol::rational_even: return "rational_even";
    case TestSymbol::constant_one: return "constant_one";
    case TestSymbol::even_polynomial: return "even_polynomial";
    case TestSymbol::arc: return "arc";
  }
  return "?";
}

inline TestSymbol parse_test_symbol(std::string_view s) {
  for (TestSymbol t : all_test_symbols)
    if (to_string(t) == s) return t;
  throw UsageError("unknown test symbol '" + std::string(s) + "'");
}

struct IdentityParams {
  double alpha = 1;
  int n = 4;
  long N = 512;  // prop21_BO truncation, block_tab size, split truncation for f64
  int degree = 4;
  std::uint64_t seed = 1;
  int trials = 8;
  TestSymbol symbol = TestSymbol::smooth_cosine;
  Precision precision = Precision::binary64;
};

// For determinant identities lhs and rhs are log|det| of the two sides and
// residual = |exp(lhs - rhs) - 1|. For block_tab they are the largest entries
// of the two sides and residual is the largest entry difference, relative.
struct IdentityResult {
  Identity which = Identity::prop33;
  double residual = 0;
  double lhs = 0;
  double rhs = 0;
};

namespace detail {

inline double relative_residual(double lhs, double rhs) { return std::abs(std::expm1(lhs - rhs)); }

inline void check_ceiling(int n, Precision p) {
  if (n < 1 || n > hankel_ceiling(p))
    throw UsageError("moment Hankel identities need 1 <= n <= " + std::to_string(hankel_ceiling(p)) + " at " +
                     std::string(to_string(p)) + " precision");
}

inline CircleSymbol identity_circle_symbol(TestSymbol s) {
  switch (s) {
    case TestSymbol::smooth_cosine: return CircleSymbol::smooth_user({0.5, 3.25, 0.5}, -1);
    case TestSymbol::rational_even: return CircleSymbol::rational_even_r(0.5, 0.5);
    case TestSymbol::constant_one: return CircleSymbol::constant(1.0);
    default: throw UsageError("test symbol '" + std::string(to_string(s)) + "' is not a smooth even circle symbol");
  }
}

template <typename Real>
std::function<Real(Real)> identity_cosine_function(TestSymbol s) {
  switch (s) {
    case TestSymbol::smooth_cosine: return [](Real x) { return Real(3.25) + x; };
    case TestSymbol::rational_even:
      return [](Real x) {
        using std::sqrt;
        const Real r = Real(1) / 2;
        return sqrt((1 + r * r - 2 * r * x) / (1 + r * r + 2 * r * x));
      };
    case TestSymbol::constant_one: return [](Real) { return Real(1); };
    default: throw UsageError("test symbol '" + std::string(to_string(s)) + "' is not available for this identity");
  }
}

template <typename Real>
double moment_logdet(const MomentFunction<Real>& b, int n) {
  return log_det(moment_hankel_matrix(moments(b, 2 * n - 1), n)).log_abs;
}

template <typename Real>
IdentityResult prop23_impl(const IdentityParams& p) {
  IdentityResult r;
  const CircleSymbol a = identity_circle_symbol(p.symbol);
  const long k_min = -(p.n - 1), k_max = 2L * p.n - 1;
  const auto c = coefficient_cast<Real>(fourier_coeffs(a, k_min, k_max));
  const Mat<Real> M = toeplitz_matrix(c, k_min, p.n) + hankel_matrix(c, k_min, p.n);
  r.lhs = log_det(M).log_abs;
  r.rhs = moment_logdet(MomentFunction<Real>::with_sqrt_weight(identity_cosine_function<Real>(p.symbol)), p.n);
  return r;
}

template <typename Real>
IdentityResult prop32_impl(const IdentityParams& p) {
  IdentityResult r;
  const int n = p.n;
  std::vector<Real> d(static_cast<size_t>(2 * n - 1), Real(0));  // d[k + n - 1] = d_k
  MomentFunction<Real> b;
  switch (p.symbol) {
    case TestSymbol::constant_one:
      d[n - 1] = 1;
      b = MomentFunction<Real>::with_sqrt_weight([](Real) { return Real(1); });
      break;
    case TestSymbol::even_polynomial:
      // b0 = 1 + x^2 gives d(e^{i theta}) = 3/2 + cos(theta)/2
      d[n - 1] = Real(3) / 2;
      if (n > 1) d[n - 2] = d[n] = Real(1) / 4;
      b = MomentFunction<Real>::with_sqrt_weight([](Real x) { return 1 + x * x; });
      break;
    case TestSymbol::arc: {
      using std::sin;
      using std::sqrt;
      const MuRho mr = mu_rho_params(p.alpha, n);
      const Real pi = boost::math::constants::pi<Real>();
      const Real a = Real(p.alpha) / n;
      for (long k = -(n - 1); k <= n - 1; ++k) d[k + n - 1] = k == 0 ? Real(1) - a / pi : -sin(k * a) / (pi * k);
      b = MomentFunction<Real>::truncated([](Real x) { return sqrt((1 + x) / (1 - x)); }, Real(mr.rho));
      break;
    }
    default: throw UsageError("test symbol '" + std::string(to_string(p.symbol)) + "' is not available for prop32");
  }
  r.lhs = moment_logdet(b, n);
  r.rhs = log_det(toeplitz_matrix(d, -(n - 1), n)).log_abs;
  return r;
}

template <typename Real>
IdentityResult prop33_impl(const IdentityParams& p) {
  IdentityResult r;
  mu_rho_params(p.alpha, p.n);
  r.lhs = toeplitz_arc_logdet<Real>(p.alpha, p.n);
  r.rhs = hankel_route_logdet<Real>(p.alpha, p.n);
  return r;
}

inline std::vector<double> random_laurent(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<size_t>(2 * d + 1));
  for (double& x : c) x = u(rng);
  return c;
}

// coefficient vector over -L..L (L >= d) of a Laurent polynomial given on -d..d
inline std::vector<double> widen(const std::vector<double>& c, int d, long L) {
  std::vector<double> out(static_cast<size_t>(2 * L + 1), 0.0);
  for (int k = -d; k <= d; ++k) out[k + L] = c[k + d];
  return out;
}

inline std::vector<double> laurent_product(const std::vector<double>& a, const std::vector<double>& b, int d) {
  std::vector<double> out(static_cast<size_t>(4 * d + 1), 0.0);
  for (int i = 0; i <= 2 * d; ++i)
    for (int j = 0; j <= 2 * d; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<double> reversed(std::vector<double> c) {
  std::reverse(c.begin(), c.end());
  return c;
}

// Largest interior-block discrepancy of T(ab) = T(a)T(b) + H(a)H(b~) and
// H(ab) = T(a)H(b) + H(a)T(b~), relative to the largest entry.
inline IdentityResult block_tab_pair(const std::vector<double>& a, const std::vector<double>& b, int d, int N) {
  const long L = 2L * N;
  const auto A = widen(a, d, L), B = widen(b, d, L), Bt = widen(reversed(b), d, L);
  const auto AB = widen(laurent_product(a, b, d), 2 * d, L);
  const Mat<double> Ta = toeplitz_matrix(A, -L, N), Ha = hankel_matrix(A, -L, N);
  const Mat<double> Tb = toeplitz_matrix(B, -L, N), Hb = hankel_matrix(B, -L, N);
  const Mat<double> Tbt = toeplitz_matrix(Bt, -L, N), Hbt = hankel_matrix(Bt, -L, N);
  const Mat<double> lhs_t = toeplitz_matrix(AB, -L, N), rhs_t = Ta * Tb + Ha * Hbt;
  const Mat<double> lhs_h = hankel_matrix(AB, -L, N), rhs_h = Ta * Hb + Ha * Tbt;
  const int m = N - d;
  IdentityResult r;
  if (m <= 0) return r;
  const double diff = std::max((lhs_t - rhs_t).topLeftCorner(m, m).cwiseAbs().maxCoeff(),
                               (lhs_h - rhs_h).topLeftCorner(m, m).cwiseAbs().maxCoeff());
  r.lhs = std::max(lhs_t.topLeftCorner(m, m).cwiseAbs().maxCoeff(), lhs_h.topLeftCorner(m, m).cwiseAbs().maxCoeff());
  r.rhs = std::max(rhs_t.topLeftCorner(m, m).cwiseAbs().maxCoeff(), rhs_h.topLeftCorner(m, m).cwiseAbs().maxCoeff());
  r.residual = diff / std::max(1.0, r.lhs);
  return r;
}

}  // namespace detail

inline IdentityResult identity_residual(Identity which, const IdentityParams& p = {}) {
  IdentityResult r;
  const bool ext = p.precision == Precision::extended;
  switch (which) {
    case Identity::prop33:
      detail::check_ceiling(p.n, p.precision);
      if (!(p.alpha > 0)) throw UsageError("prop33 needs alpha > 0");
      r = ext ? detail::prop33_impl<Extended>(p) : detail::prop33_impl<double>(p);
      break;
    case Identity::prop23:
      detail::check_ceiling(p.n, p.precision);
      r = ext ? detail::prop23_impl<Extended>(p) : detail::prop23_impl<double>(p);
      break;
    case Identity::prop32:
      detail::check_ceiling(p.n, p.precision);
      r = ext ? detail::prop32_impl<Extended>(p) : detail::prop32_impl<double>(p);
      break;
    case Identity::prop21_BO: {
      if (p.n < 1) throw UsageError("prop21_BO needs n >= 1");
      if (p.N < 2L * p.n) throw UsageError("prop21_BO needs N >= 2n");
      const CircleSymbol a = detail::identity_circle_symbol(p.symbol);
      const long k_min = -(p.n - 1), k_max = 2L * p.n - 1;
      const auto c = detail::coefficient_cast<double>(fourier_coeffs(a, k_min, k_max));
      r.lhs = log_det(toeplitz_matrix(c, k_min, p.n) + hankel_matrix(c, k_min, p.n)).log_abs;
      const FactorizationResult f = wiener_hopf_factor_even(a);
      const SectionResult s = finite_section_resolvent_corner(f.psi, p.n, p.N);
      r.rhs = p.n * std::log(f.G) + s.levels.front().logdet.log_abs;
      break;
    }
    case Identity::f64: {
      if (!(p.alpha > 0)) throw UsageError("f64 needs alpha > 0");
      RouteParams rp;
      rp.N = p.N;
      r.lhs = nystrom_logdet(p.alpha, 64).log_abs;
      r.rhs = gap_logdet(p.alpha, Route::split, rp).logdet.log_abs;
      break;
    }
    case Identity::block_tab: {
      if (p.degree < 0 || p.N <= 2L * p.degree) throw UsageError("block_tab needs N > 2 degree");
      std::mt19937_64 rng(p.seed);
      r.which = which;
      for (int trial = 0; trial < std::max(1, p.trials); ++trial) {
        const auto a = detail::random_laurent(rng, p.degree);
        const auto b = detail::random_laurent(rng, p.degree);
        const IdentityResult t = detail::block_tab_pair(a, b, p.degree, static_cast<int>(p.N));
        if (t.residual >= r.residual) r = t;
      }
      r.which = which;
      return r;
    }
  }
  r.which = which;
  r.residual = detail::relative_residual(r.lhs, r.rhs);
  return r;
}

// ---- sigma ------------------------------------------------------------------

struct SigmaResult {
  double alpha = 0;
  double sigma = 0;
  double step = 0;    // step size of the accepted difference quotient
  double change = 0;  // change under the last halving
};

// sigma(alpha) = alpha d/d alpha log det(I - K_alpha) by central differences
// of the nystrom route, halving the step until the result settles.
inline SigmaResult sigma(double alpha, double step, int m = 64, int max_halvings = 12) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw UsageError("sigma needs alpha > 0");
  if (!(step > 0) || step > alpha / 10) throw UsageError("sigma needs 0 < step <= alpha/10");
  auto quotient = [&](double h) {
    const double up = nystrom_logdet(alpha + h, m).log_abs;
    const double down = nystrom_logdet(alpha - h, m).log_abs;
    return alpha * (up - down) / (2 * h);
  };
  SigmaResult s;
  s.alpha = alpha;
  double h = step;
  double prev = quotient(h);
  for (int i = 0; i < max_halvings; ++i) {
    h /= 2;
    const double cur = quotient(h);
    s.change = std::abs(cur - prev);
    if (s.change < 1e-6) {
      s.sigma = cur;
      s.step = h;
      return s;
    }
    prev = cur;
  }
  throw AccuracyError("sigma did not settle under step halving (last change " + std::to_string(s.change) + ")",
                      prev, prev);
}

// ---- constant extraction ----------------------------------------------------

struct FitReport {
  std::vector<double> beta_grid;  // the gap is 2 beta
  std::vector<double> logdets;
  Route route = Route::nystrom;
  int model_order = 0;
  double C_est = 0;
  std::vector<double> correction_coeffs;  // c_2, c_4, ... of beta^-2, beta^-4, ...
  double max_residual = 0;
};

// Least squares for logdet + beta^2/2 + log(beta)/4 = C + sum_j c_{2j} beta^{-2j}.
inline FitReport fit_constant(const std::vector<double>& betas, const std::vector<double>& logdets, int order) {
  if (order < 0) throw UsageError("model order must be >= 0");
  if (betas.size() != logdets.size()) throw UsageError("beta grid and logdets differ in length");
  if (betas.size() < static_cast<size_t>(order + 1))
    throw UsageError("fit needs at least order + 1 grid points");
  const Eigen::Index rows = static_cast<Eigen::Index>(betas.size()), cols = order + 1;
  Eigen::MatrixXd X(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double b = betas[i];
    if (!(b > 0)) throw UsageError("beta grid must be positive");
    y(i) = logdets[i] + b * b / 2 + std::log(b) / 4;
    for (Eigen::Index j = 0; j < cols; ++j) X(i, j) = std::pow(b, -2.0 * j);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < cols) throw UsageError("fit design is rank deficient; use distinct beta values");
  const Eigen::VectorXd coef = qr.solve(y);
  FitReport f;
  f.beta_grid = betas;
  f.logdets = logdets;
  f.model_order = order;
  f.C_est = coef(0);
  for (Eigen::Index j = 1; j < cols; ++j) f.correction_coeffs.push_back(coef(j));
  f.max_residual = (X * coef - y).cwiseAbs().maxCoeff();
  return f;
}

inline FitReport extract_constant(const std::vector<double>& betas, Route route, int order,
                                  const RouteParams& rp = {}) {
  std::vector<double> logdets;
  logdets.reserve(betas.size());
  for (double b : betas) {
    if (!(b > 0)) throw UsageError("beta grid must be positive");
    logdets.push_back(gap_logdet(2 * b, route, rp).logdet.log_abs);
  }
  FitReport f = fit_constant(betas, logdets, order);
  f.route = route;
  return f;
}

inline std::vector<double> beta_grid(double beta_min, double beta_max, int points) {
  if (points < 1) throw UsageError("grid needs at least one point");
  if (!(beta_min > 0) || beta_max < beta_min) throw UsageError("grid needs 0 < beta_min <= beta_max");
  if (points == 1) return {beta_min};
  std::vector<double> g(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) g[i] = beta_min + (beta_max - beta_min) * i / (points - 1);
  return g;
}

}  // namespace sinegap
