#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sinegap/log_det.hpp"
#include "sinegap/structured_linear.hpp"

using namespace sinegap;
using cd = std::complex<double>;

TEST(LogDet, MatchesCofactorExpansionReal) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 7; ++n) {
    Mat<double> A(n, n);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = A(i, j) = g(rng);
    const double det = oracle::cofactor_det(rows);
    const LogDetValue v = log_det(A);
    EXPECT_NEAR(v.log_abs, std::log(std::abs(det)), 1e-12);
    EXPECT_EQ(v.phase.real(), det < 0 ? -1.0 : 1.0);
  }
}

TEST(LogDet, MatchesCofactorExpansionComplex) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  const int n = 6;
  Mat<cd> A(n, n);
  std::vector<std::vector<cd>> rows(n, std::vector<cd>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = A(i, j) = cd(g(rng), g(rng));
  const cd det = oracle::cofactor_det(rows);
  const LogDetValue v = log_det(A);
  EXPECT_NEAR(v.log_abs, std::log(std::abs(det)), 1e-12);
  EXPECT_LT(std::abs(v.phase - det / std::abs(det)), 1e-12);
}

TEST(LogDet, NoUnderflowForLargeScaledMatrix) {
  const int n = 400;
  Mat<double> A = 1e-3 * Mat<double>::Identity(n, n);
  EXPECT_NEAR(log_det(A).log_abs, n * std::log(1e-3), 1e-9);
}

TEST(LogDet, SingularMatrixIsDegenerate) {
  Mat<double> A = Mat<double>::Zero(3, 3);
  A(0, 0) = 1;
  const LogDetValue v = log_det(A);
  EXPECT_TRUE(v.degenerate);
  EXPECT_TRUE(std::isinf(v.log_abs));
}

TEST(StructuredLinear, MatrixLayout) {
  // c[k + 2] = a_k for k = -2..3
  const std::vector<double> c = {-2, -1, 0, 1, 2, 3};
  const auto T = toeplitz_matrix(c, -2, 3);
  const auto H = hankel_matrix(c, -2, 2);
  EXPECT_EQ(T(0, 0), 0);
  EXPECT_EQ(T(2, 0), 2);
  EXPECT_EQ(T(0, 2), -2);
  EXPECT_EQ(H(0, 0), 1);
  EXPECT_EQ(H(1, 1), 3);
  const auto M = moment_hankel_matrix(std::vector<double>{1, 2, 3}, 2);
  EXPECT_EQ(M(0, 0), 1);
  EXPECT_EQ(M(0, 1), 2);
  EXPECT_EQ(M(1, 1), 3);
  EXPECT_THROW(moment_hankel_matrix(std::vector<double>{1, 2}, 2), UsageError);
}

TEST(StructuredLinear, MatrixOfSymbol) {
  const auto T = matrix_of(MatrixKind::toeplitz, CircleSymbol::smooth_user({0.5, 3.25, 0.5}, -1), 4);
  EXPECT_NEAR(T(1, 1).real(), 3.25, 1e-15);
  EXPECT_NEAR(T(1, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(T(3, 0).real(), 0.0, 1e-15);
  EXPECT_THROW(matrix_of(MatrixKind::moment_hankel, CircleSymbol::constant(1.0), 3), UsageError);
}

TEST(FiniteSection, TrivialSymbolGivesIdentityCorner) {
  const auto s = finite_section_resolvent_corner(CircleSymbol::constant(0.0), 4, 16);
  EXPECT_NEAR(s.extrapolated_logdet.log_abs, 0.0, 1e-15);
  EXPECT_LT((s.corner - DenseMatrix::Identity(4, 4)).norm(), 1e-15);
  EXPECT_THROW(finite_section_resolvent_corner(CircleSymbol::constant(0.0), 4, 6), UsageError);
}

TEST(FiniteSection, JumpSymbolIsExtrapolated) {
  const auto s = finite_section_resolvent_corner(CircleSymbol::psi_full(1.0, 16), 16, 256);
  EXPECT_GT(s.error_order, 0);
  ASSERT_EQ(s.levels.size(), 2u);
  EXPECT_EQ(s.levels[1].truncation, 512);
  EXPECT_GT(s.levels[1].min_singular_estimate, 1e-3);
}

TEST(Split, ZeroLengthIsIdentity) {
  const auto r = complemented_split_det(0.0, SplitBranch::plus_minus_half, 64);
  EXPECT_NEAR(r.logdet.log_abs, 0.0, 1e-14);
  EXPECT_THROW(complemented_split_det(-1.0, SplitBranch::plus_minus_half, 64), UsageError);
}

TEST(Split, ProjectionDefectShrinks) {
  const double d1 = projection_defect(1.0, 256), d2 = projection_defect(1.0, 1024);
  EXPECT_LT(d2, d1);
  EXPECT_LT(d2, 0.1);
}

TEST(Split, LooseToleranceOnly) {
  EXPECT_THROW(complemented_split_det(1.0, SplitBranch::minus_plus_half, 64, 1e-6), AccuracyError);
}

TEST(Diagnostics, InvertibilityAndDecay) {
  const DiagnosticsRecord d = operator_diagnostics(1.0, 8, 256);
  EXPECT_GT(d.min_sv_plus, 0.05);
  EXPECT_GT(d.min_sv_minus, 0.05);
  EXPECT_GT(d.min_sv_psi, 0.05);
  ASSERT_EQ(d.trace_norm_sweep.size(), 3u);
  for (size_t i = 1; i < d.trace_norm_sweep.size(); ++i)
    EXPECT_LT(d.trace_norm_sweep[i].forward_product, d.trace_norm_sweep[i - 1].forward_product);
  EXPECT_EQ(d.leading_sv_u.size(), 8u);
  EXPECT_THROW(operator_diagnostics(1.0, 8, 32), UsageError);
}
