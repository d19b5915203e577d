// Acceptance checks 1-8. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Tolerances and runtime budgets are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sinegap/determinant_routes.hpp"

using namespace sinegap;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome constants_check() {
  double worst = 0;
  for (const auto& r : constant_relations()) worst = std::max(worst, std::abs(r.residual));
  const double zp_gap = std::abs(constant(ConstantName::zeta_prime_minus_one) - oracle::zeta_prime_minus_one());
  worst = std::max(worst, zp_gap);
  return {worst <= 1e-12, fmt("max relation residual %.2e (zeta'(-1) vs hyperfactorial %.2e)", worst, zp_gap)};
}

Outcome identity_suite() {
  double w33 = 0, w23 = 0, w32 = 0;
  IdentityParams p;
  for (int n = 1; n <= 8; ++n) {
    p.n = n;
    for (double a : {0.5, 1.0, 2.0}) {
      p.alpha = a;
      w33 = std::max(w33, identity_residual(Identity::prop33, p).residual);
    }
    for (TestSymbol s : {TestSymbol::smooth_cosine, TestSymbol::rational_even, TestSymbol::constant_one}) {
      p.symbol = s;
      w23 = std::max(w23, identity_residual(Identity::prop23, p).residual);
    }
    p.alpha = 1.0;
    for (TestSymbol s : {TestSymbol::constant_one, TestSymbol::even_polynomial, TestSymbol::arc}) {
      p.symbol = s;
      w32 = std::max(w32, identity_residual(Identity::prop32, p).residual);
    }
  }
  IdentityParams t;
  t.N = 64;
  t.degree = 4;
  t.trials = 16;
  const double wtab = identity_residual(Identity::block_tab, t).residual;
  const bool ok = w33 <= 1e-10 && w23 <= 1e-9 && w32 <= 1e-9 && wtab <= 1e-12;
  return {ok, fmt("prop33 %.2e, prop23 %.2e, prop32 %.2e", w33, w23, w32) + fmt(", block_tab %.2e", wtab)};
}

Outcome finite_section_identity() {
  IdentityParams p;
  p.n = 4;
  p.symbol = TestSymbol::smooth_cosine;
  p.N = 512;
  const double r512 = identity_residual(Identity::prop21_BO, p).residual;
  p.N = 1024;
  const double r1024 = identity_residual(Identity::prop21_BO, p).residual;
  // both truncations sit at rounding level; decrease is required above 1e-13
  const bool ok = r512 <= 1e-8 && r1024 <= std::max(r512, 1e-13);
  return {ok, fmt("residual N=512 %.2e, N=1024 %.2e", r512, r1024)};
}

Outcome route_consensus() {
  bool ok = true;
  std::string d;
  for (double a : {1.0, 2.0, 4.0}) {
    const double ref = nystrom_logdet(a, 64).log_abs;
    const double dt = std::abs(gap_logdet(a, Route::toeplitz).logdet.log_abs - ref);
    RouteParams rp;
    rp.n = std::max(8, static_cast<int>(std::ceil(16 * a)));
    rp.N = 16L * rp.n;
    const double dr = std::abs(gap_logdet(a, Route::resolvent, rp).logdet.log_abs - ref);
    ok = ok && dt <= 1e-4 && dr <= 1e-4;
    d += fmt("a=%g toeplitz %.1e resolvent %.1e; ", a, dt, dr);
  }
  for (double a : {2.0, 4.0}) {
    RouteParams rp;
    rp.N = 2048;
    const double ds = std::abs(gap_logdet(a, Route::split, rp).logdet.log_abs - nystrom_logdet(a, 64).log_abs);
    ok = ok && ds <= 1e-2;
    d += fmt("a=%g split %.1e; ", a, ds);
  }
  return {ok, d};
}

Outcome dyson_constant() {
  RouteParams rp;
  rp.m = 128;
  const FitReport f = extract_constant(beta_grid(3.0, 6.0, 7), Route::nystrom, 2, rp);
  const double C = std::log(2.0) / 12 + 3 * oracle::zeta_prime_minus_one();
  const double err = std::abs(f.C_est - C);
  return {err <= 5e-3, fmt("C_est %.10f, reference %.10f, |error| %.2e", f.C_est, C, err)};
}

Outcome be3_ratio() {
  const double alpha = 8;
  const double base = -std::log(alpha) / 8 + std::log(M_PI) / 4 + constant(ConstantName::log_barnes_g_half);
  bool ok = true;
  std::string d;
  for (SplitBranch b : {SplitBranch::plus_minus_half, SplitBranch::minus_plus_half}) {
    const double sign = b == SplitBranch::plus_minus_half ? 1.0 : -1.0;
    const double ref = base + sign * std::log(2.0) / 4;
    // stable under doubling: both truncations must land in the window
    for (long N : {1024L, 2048L}) {
      const double ratio = std::exp(complemented_split_det(alpha, b, N).logdet.log_abs - ref);
      ok = ok && ratio >= 0.98 && ratio <= 1.02;
      d += std::string(to_string(b)) + fmt(" N=%g ratio %.4f; ", double(N), ratio);
    }
  }
  return {ok, d};
}

Outcome diagnostics_monotone() {
  const DiagnosticsRecord rec = operator_diagnostics(1.0, 8, 1024);
  bool ok = true;
  std::string d = "nuclear";
  for (size_t i = 0; i < rec.trace_norm_sweep.size(); ++i) {
    const auto& s = rec.trace_norm_sweep[i];
    d += fmt(" %.3e", s.forward_product);
    if (i > 0) ok = ok && s.forward_product < rec.trace_norm_sweep[i - 1].forward_product;
  }
  double lowest = HUGE_VAL;
  for (long N : {512L, 1024L, 2048L}) {
    const double plus = detail::min_singular_shifted(detail::real_hankel(CircleSymbol::u_jump(-0.5, 1), N), 1.0);
    const double minus = detail::min_singular_shifted(detail::real_hankel(CircleSymbol::u_jump(0.5, 1), N), -1.0);
    lowest = std::min({lowest, plus, minus});
  }
  ok = ok && lowest > 0.05;
  return {ok, d + fmt("; smallest singular value over N=512..2048 %.4f", lowest)};
}

Outcome sigma_checks() {
  const double s0 = sigma(0.01, 0.001).sigma;
  const double want0 = -0.01 / M_PI;
  const double s8 = sigma(8.0, 0.1).sigma;
  const double want8 = -16.0 - 0.25;
  const double rel0 = std::abs(s0 / want0 - 1), rel8 = std::abs(s8 / want8 - 1);
  return {rel0 <= 0.02 && rel8 <= 0.05,
          fmt("sigma(0.01) %.7f (rel %.2e)", s0, rel0) + fmt(", sigma(8) %.5f (rel %.2e)", s8, rel8)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "constant relations", 1, constants_check},
      {2, "identity suite", 30, identity_suite},
      {3, "finite-section identity", 30, finite_section_identity},
      {4, "route consensus", 600, route_consensus},
      {5, "gap constant fit", 120, dyson_constant},
      {6, "split asymptotics ratio", 300, be3_ratio},
      {7, "diagnostics monotonicity", 300, diagnostics_monotone},
      {8, "sigma checks", 60, sigma_checks},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < c.budget_seconds;
    if (!pass) ++failures;
    std::printf("%s %d %s: %s [%.2fs, budget %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.budget_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
