#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sinegap/determinant_routes.hpp"

using namespace sinegap;

namespace {
const double kNystrom1 = -0.379271228440565;
}

TEST(Routes, NamesRoundTrip) {
  for (Route r : all_routes) EXPECT_EQ(parse_route(to_string(r)), r);
  for (Identity w : all_identities) EXPECT_EQ(parse_identity(to_string(w)), w);
  for (TestSymbol s : all_test_symbols) EXPECT_EQ(parse_test_symbol(to_string(s)), s);
  EXPECT_THROW(parse_route("magic"), UsageError);
}

TEST(Routes, ZeroLengthIsZero) {
  for (Route r : {Route::nystrom, Route::toeplitz, Route::hankel, Route::resolvent, Route::split})
    EXPECT_EQ(gap_logdet(0.0, r).logdet.log_abs, 0.0) << to_string(r);
}

TEST(Routes, AsymptoticFormula) {
  const double zp = oracle::zeta_prime_minus_one();
  const double C = std::log(2.0) / 12 + 3 * zp;
  const GapEstimate g = gap_logdet(20.0, Route::asymptotic);
  EXPECT_NEAR(g.logdet.log_abs, -50 - std::log(10.0) / 4 + C, 1e-12);
  EXPECT_NEAR(g.logdet.log_abs, -51.0141, 1e-4);
  EXPECT_TRUE(std::isinf(g.error_estimate));
  EXPECT_THROW(gap_logdet(0.0, Route::asymptotic), DomainError);
}

TEST(Routes, ToeplitzAgreesWithNystrom) {
  const GapEstimate t = gap_logdet(1.0, Route::toeplitz);
  EXPECT_NEAR(t.logdet.log_abs, kNystrom1, 1e-6);
  EXPECT_NEAR(t.params.at("observed_order"), 2.0, 0.05);
}

TEST(Routes, ResolventWithinOwnError) {
  const GapEstimate r = gap_logdet(1.0, Route::resolvent);
  EXPECT_LT(std::abs(r.logdet.log_abs - kNystrom1), r.error_estimate);
  EXPECT_LT(std::abs(r.logdet.log_abs - kNystrom1), 1e-4);
}

TEST(Routes, HankelWithinOwnError) {
  for (double a : {0.5, 1.0, 2.0}) {
    const GapEstimate h = gap_logdet(a, Route::hankel);
    EXPECT_LT(std::abs(h.logdet.log_abs - nystrom_logdet(a, 64).log_abs), h.error_estimate) << a;
  }
}

TEST(Routes, PrecisionRules) {
  RouteParams rp;
  rp.n = 13;
  EXPECT_THROW(gap_logdet(1.0, Route::hankel, rp), UsageError);
  rp.precision = Precision::extended;
  EXPECT_NO_THROW(gap_logdet(1.0, Route::hankel, rp));
  EXPECT_THROW(gap_logdet(1.0, Route::resolvent, rp), UsageError);
  EXPECT_THROW(gap_logdet(-1.0, Route::nystrom), UsageError);
}

TEST(Identities, Prop33Small) {
  IdentityParams p;
  p.alpha = 1;
  p.n = 4;
  EXPECT_LE(identity_residual(Identity::prop33, p).residual, 1e-10);
}

TEST(Identities, Prop33Extended) {
  IdentityParams p;
  p.alpha = 1;
  p.n = 16;
  p.precision = Precision::extended;
  EXPECT_LE(identity_residual(Identity::prop33, p).residual, 1e-10);
}

TEST(Identities, Prop23AndProp32) {
  IdentityParams p;
  p.n = 6;
  for (TestSymbol s : {TestSymbol::smooth_cosine, TestSymbol::rational_even, TestSymbol::constant_one}) {
    p.symbol = s;
    EXPECT_LE(identity_residual(Identity::prop23, p).residual, 1e-9) << to_string(s);
  }
  for (TestSymbol s : {TestSymbol::constant_one, TestSymbol::even_polynomial, TestSymbol::arc}) {
    p.symbol = s;
    EXPECT_LE(identity_residual(Identity::prop32, p).residual, 1e-9) << to_string(s);
  }
  p.symbol = TestSymbol::arc;
  EXPECT_THROW(identity_residual(Identity::prop23, p), UsageError);
}

TEST(Identities, ConstantOneHasUnitDeterminants) {
  IdentityParams p;
  p.n = 5;
  p.symbol = TestSymbol::constant_one;
  const IdentityResult r = identity_residual(Identity::prop32, p);
  EXPECT_NEAR(r.lhs, 0.0, 1e-12);
  EXPECT_NEAR(r.rhs, 0.0, 1e-15);
}

TEST(Identities, FiniteSectionBO) {
  IdentityParams p;
  p.n = 4;
  p.N = 512;
  EXPECT_LE(identity_residual(Identity::prop21_BO, p).residual, 1e-8);
}

TEST(Identities, BlockProductTrivialCase) {
  const IdentityResult r = detail::block_tab_pair({1.0}, {1.0}, 0, 64);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Identities, BlockProductRandom) {
  IdentityParams p;
  p.N = 64;
  p.degree = 4;
  EXPECT_LE(identity_residual(Identity::block_tab, p).residual, 1e-12);
  p.N = 8;
  EXPECT_THROW(identity_residual(Identity::block_tab, p), UsageError);
}

TEST(Sigma, SmallGap) {
  const double a = 0.01;
  EXPECT_NEAR(sigma(a, 0.001).sigma, oracle::small_gap_series(a).sigma, 1e-9);
}

TEST(Sigma, IsAlphaTimesDerivative) {
  const SigmaResult s = sigma(1.0, 0.05);
  const double h = 1e-4;
  const double d = (nystrom_logdet(1 + h, 64).log_abs - nystrom_logdet(1 - h, 64).log_abs) / (2 * h);
  EXPECT_NEAR(s.sigma, d, 1e-6);
  EXPECT_THROW(sigma(1.0, 0.2), UsageError);
}

TEST(Fit, AsymptoticInputsReturnTheConstant) {
  const auto grid = beta_grid(3, 6, 7);
  const FitReport f = extract_constant(grid, Route::asymptotic, 0);
  EXPECT_NEAR(f.C_est, constant(ConstantName::dyson_constant), 1e-14);
  EXPECT_LT(f.max_residual, 1e-13);
}

TEST(Fit, SinglePointAlgebra) {
  const FitReport f = fit_constant({4.0}, {-9.0}, 0);
  EXPECT_NEAR(f.C_est, -9.0 + 8.0 + std::log(4.0) / 4, 1e-14);
}

TEST(Fit, RejectsDegenerateDesigns) {
  EXPECT_THROW(fit_constant({3.0, 3.0}, {-5.0, -5.0}, 1), UsageError);
  EXPECT_THROW(fit_constant({3.0}, {-5.0}, 1), UsageError);
  EXPECT_THROW(fit_constant({3.0, 4.0}, {-5.0}, 0), UsageError);
}

TEST(Fit, NystromRecoversConstant) {
  RouteParams rp;
  rp.m = 128;
  const FitReport f = extract_constant(beta_grid(3, 6, 7), Route::nystrom, 2, rp);
  EXPECT_NEAR(f.C_est, constant(ConstantName::dyson_constant), 5e-3);
  ASSERT_EQ(f.correction_coeffs.size(), 2u);
}

TEST(Fit, AsymptoticGapShrinks) {
  const double d5 = gap_logdet(10.0, Route::asymptotic).logdet.log_abs - nystrom_logdet(10.0, 128).log_abs;
  const double d6 = gap_logdet(12.0, Route::asymptotic).logdet.log_abs - nystrom_logdet(12.0, 128).log_abs;
  EXPECT_LT(std::abs(d6), std::abs(d5));
}
