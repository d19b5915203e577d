#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sinegap/circle_symbols.hpp"
#include "sinegap/errors.hpp"
#include "sinegap/fourier.hpp"
#include "sinegap/log_det.hpp"
#include "sinegap/moments.hpp"

namespace sinegap {

using DenseMatrix = Eigen::MatrixXcd;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class MatrixKind { toeplitz, hankel, moment_hankel, toeplitz_plus_hankel };

// T_n = (a_{j-k}); c[k - k_min] = a_k must cover -(n-1)..n-1.
template <typename Scalar>
Mat<Scalar> toeplitz_matrix(const std::vector<Scalar>& c, long k_min, int n) {
  Mat<Scalar> T(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) T(j, k) = c[static_cast<size_t>(j - k - k_min)];
  return T;
}

// H_n = (a_{j+k+1}); c[k - k_min] = a_k must cover 1..2n-1.
template <typename Scalar>
Mat<Scalar> hankel_matrix(const std::vector<Scalar>& c, long k_min, int n) {
  Mat<Scalar> H(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) H(j, k) = c[static_cast<size_t>(j + k + 1 - k_min)];
  return H;
}

// H_n[b] = (b_{1+j+k}); moments[i] = b_{i+1}.
template <typename Real>
Mat<Real> moment_hankel_matrix(const std::vector<Real>& moments, int n) {
  if (static_cast<int>(moments.size()) < 2 * n - 1) throw UsageError("moment Hankel needs b_1..b_{2n-1}");
  Mat<Real> H(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) H(j, k) = moments[static_cast<size_t>(j + k)];
  return H;
}

inline DenseMatrix matrix_of(MatrixKind kind, const CircleSymbol& a, int n, const FourierOptions& opt = {}) {
  if (n < 1) throw UsageError("matrix order must be >= 1");
  if (kind == MatrixKind::moment_hankel) throw UsageError("moment_hankel needs a MomentFunction source");
  const long k_min = -(n - 1), k_max = 2L * n - 1;
  const std::vector<cplx> c = fourier_coeffs(a, k_min, k_max, opt);
  switch (kind) {
    case MatrixKind::toeplitz: return toeplitz_matrix(c, k_min, n);
    case MatrixKind::hankel: return hankel_matrix(c, k_min, n);
    default: return toeplitz_matrix(c, k_min, n) + hankel_matrix(c, k_min, n);
  }
}

inline DenseMatrix matrix_of(MatrixKind kind, const MomentFunction<double>& b, int n) {
  if (n < 1) throw UsageError("matrix order must be >= 1");
  if (kind != MatrixKind::moment_hankel) throw UsageError("a MomentFunction only builds moment_hankel matrices");
  return moment_hankel_matrix(moments(b, 2 * n - 1), n).cast<cplx>();
}

namespace detail {

template <typename Scalar>
double one_norm(const Mat<Scalar>& A) {
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

// Lower estimate of the smallest singular value, 1/||A^{-1}||_1. For the
// (complex) symmetric matrices used here ||A^{-1}||_2 <= ||A^{-1}||_1, so a
// small value here is a conservative warning.
template <typename Scalar>
double min_singular_estimate(const Eigen::PartialPivLU<Mat<Scalar>>& lu, const Mat<Scalar>& A) {
  return static_cast<double>(lu.rcond()) * one_norm(A);
}

template <typename Scalar>
std::vector<Scalar> coefficient_cast(const std::vector<cplx>& c) {
  std::vector<Scalar> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if constexpr (is_complex<Scalar>::value) out[i] = c[i];
    else out[i] = c[i].real();
  }
  return out;
}

}  // namespace detail

struct SectionLevel {
  long truncation = 0;
  LogDetValue logdet;
  double min_singular_estimate = 0;
};

struct SectionResult {
  DenseMatrix corner;  // n x n corner of the inverse at the finest truncation
  long truncation_used = 0;
  LogDetValue extrapolated_logdet;
  double error_estimate = 0;
  double error_order = 0;  // 0 means no extrapolation was applied
  std::vector<SectionLevel> levels;
};

struct SectionOptions {
  double error_order = 1.5;  // observed decay exponent for symbols with jumps
  double singular_floor = 1e-8;
};

namespace detail {

template <typename Scalar>
SectionLevel section_level(const std::vector<Scalar>& a, int n, long N, double floor, Mat<Scalar>* corner) {
  Mat<Scalar> A = hankel_matrix(a, 0, static_cast<int>(N));
  A.diagonal().array() += Scalar(1);
  Eigen::PartialPivLU<Mat<Scalar>> lu(A);
  SectionLevel lvl;
  lvl.truncation = N;
  lvl.min_singular_estimate = min_singular_estimate(lu, A);
  if (!(lvl.min_singular_estimate > floor))
    throw DomainError("I + H_N(psi) is numerically singular at N = " + std::to_string(N) +
                      ": smallest singular value estimate " + std::to_string(lvl.min_singular_estimate));
  const Mat<Scalar> X = lu.solve(Mat<Scalar>::Identity(N, n));
  const Mat<Scalar> C = X.topRows(n);
  lvl.logdet = log_det(C);
  if (corner) *corner = C;
  return lvl;
}

inline LogDetValue richardson(const LogDetValue& coarse, const LogDetValue& fine, double order) {
  LogDetValue out = fine;
  out.log_abs = fine.log_abs + (fine.log_abs - coarse.log_abs) / (std::pow(2.0, order) - 1);
  return out;
}

}  // namespace detail

// n x n corner of (I + H_N(psi))^{-1} at truncations N and 2N.
inline SectionResult finite_section_resolvent_corner(const CircleSymbol& psi, int n, long N,
                                                     double tolerance = 1e-12,
                                                     const SectionOptions& opt = {}) {
  if (n < 1) throw UsageError("corner order n must be >= 1");
  if (N < 2L * n) throw UsageError("finite section needs N >= 2n");
  FourierOptions fo;
  fo.tolerance = tolerance;
  const std::vector<cplx> c = fourier_coeffs(psi, 0, 4 * N, fo);
  SectionResult out;
  out.truncation_used = N;
  if (coefficients_are_real(c)) {
    const auto a = detail::coefficient_cast<double>(c);
    Mat<double> C;
    out.levels.push_back(detail::section_level<double>(a, n, N, opt.singular_floor, nullptr));
    out.levels.push_back(detail::section_level<double>(a, n, 2 * N, opt.singular_floor, &C));
    out.corner = C.cast<cplx>();
  } else {
    Mat<cplx> C;
    out.levels.push_back(detail::section_level<cplx>(c, n, N, opt.singular_floor, nullptr));
    out.levels.push_back(detail::section_level<cplx>(c, n, 2 * N, opt.singular_floor, &C));
    out.corner = C;
  }
  const LogDetValue& coarse = out.levels[0].logdet;
  const LogDetValue& fine = out.levels[1].logdet;
  out.error_estimate = std::abs(fine.log_abs - coarse.log_abs);
  if (psi.has_jumps() && opt.error_order > 0) {
    out.error_order = opt.error_order;
    out.extrapolated_logdet = detail::richardson(coarse, fine, opt.error_order);
  } else {
    out.extrapolated_logdet = fine;
  }
  return out;
}

// ---- complemented split operators -------------------------------------------

enum class SplitBranch { plus_minus_half, minus_plus_half };

inline std::string_view to_string(SplitBranch b) {
  return b == SplitBranch::plus_minus_half ? "plus_minus_half" : "minus_plus_half";
}

struct SplitOptions {
  double error_order = 0.5;  // observed N^{-1/2} decay; <= 0 disables extrapolation
  double singular_floor = 1e-8;
  int defect_block = 16;
};

struct SplitResult {
  LogDetValue logdet;  // extrapolated from truncations N/2 and N
  LogDetValue finest;  // raw value at truncation N
  double error_estimate = 0;
  double projection_defect = 0;
  std::vector<SectionLevel> levels;
};

// Spectral norm of the leading block x block corner of H^3 - H. The full
// truncation never converges in norm (the cut at N spoils the projection
// near the far corner), while this block goes to zero like N^{-1/2}.
inline double projection_defect(const Mat<double>& H, int block = 16) {
  const int b = static_cast<int>(std::min<Eigen::Index>(block, H.rows()));
  const Mat<double> left = H.leftCols(b);
  const Mat<double> cube = H * (H * left);
  const Mat<double> D = (cube - left).topRows(b);
  Eigen::JacobiSVD<Mat<double>> svd(D);
  return svd.singularValues()(0);
}

namespace detail {

inline Mat<double> real_hankel(const CircleSymbol& a, long N, const FourierOptions& fo = {}) {
  const std::vector<cplx> c = fourier_coeffs(a, 0, 2 * N, fo);
  return hankel_matrix(detail::coefficient_cast<double>(c), 0, static_cast<int>(N));
}

}  // namespace detail

inline double projection_defect(double alpha_continuous, long N, int block = 16) {
  return projection_defect(detail::real_hankel(CircleSymbol::h_exp(2 * alpha_continuous), N), block);
}

// log det[I + H(h)(I +- H(u))^{-1} H(h) - H(h)^2] with h = h_{2 alpha}, i.e.
// the projection H(h)^2 corresponds to an interval of length alpha on the
// continuous side. Branch plus_minus_half uses I + H(u_{-1/2,1}); branch
// minus_plus_half uses I - H(u_{1/2,1}).
inline SplitResult complemented_split_det(double alpha, SplitBranch branch, long N, double tolerance = 0.1,
                                          const SplitOptions& opt = {}) {
  if (!(alpha >= 0)) throw UsageError("complemented_split_det needs alpha >= 0");
  if (N < 4) throw UsageError("complemented_split_det needs N >= 4");
  const CircleSymbol h = CircleSymbol::h_exp(2 * alpha);
  const CircleSymbol u = branch == SplitBranch::plus_minus_half ? CircleSymbol::u_jump(-0.5, 1)
                                                               : CircleSymbol::u_jump(0.5, 1);
  const double sign = branch == SplitBranch::plus_minus_half ? 1.0 : -1.0;
  const auto hc = detail::coefficient_cast<double>(fourier_coeffs(h, 0, 2 * N));
  const auto uc = detail::coefficient_cast<double>(fourier_coeffs(u, 0, 2 * N));

  SplitResult out;
  for (long M : {N / 2, N}) {
    const int m = static_cast<int>(M);
    const Mat<double> Hh = hankel_matrix(hc, 0, m);
    Mat<double> inner = sign * hankel_matrix(uc, 0, m);
    inner.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Mat<double>> lu(inner);
    SectionLevel lvl;
    lvl.truncation = M;
    lvl.min_singular_estimate = detail::min_singular_estimate(lu, inner);
    if (!(lvl.min_singular_estimate > opt.singular_floor))
      throw DomainError("inner operator I +- H_N(u) is numerically singular at N = " + std::to_string(M) +
                        ": smallest singular value estimate " + std::to_string(lvl.min_singular_estimate));
    Mat<double> X = Hh * lu.solve(Hh) - Hh * Hh;
    X.diagonal().array() += 1.0;
    lvl.logdet = log_det(X);
    out.levels.push_back(lvl);
    if (M == N) out.projection_defect = projection_defect(Hh, opt.defect_block);
  }
  if (out.projection_defect > tolerance)
    throw AccuracyError("projection defect " + std::to_string(out.projection_defect) + " of H_N(h)^3 - H_N(h) exceeds " +
                            std::to_string(tolerance) + "; increase N",
                        out.levels[0].logdet.log_abs, out.levels[1].logdet.log_abs);
  out.finest = out.levels[1].logdet;
  out.error_estimate = std::abs(out.levels[1].logdet.log_abs - out.levels[0].logdet.log_abs);
  out.logdet = opt.error_order > 0 ? detail::richardson(out.levels[0].logdet, out.levels[1].logdet, opt.error_order)
                                   : out.finest;
  return out;
}

// ---- diagnostics ------------------------------------------------------------

struct TraceNormSample {
  double mu = 0;
  double forward_product = 0;   // sum of singular values of H(psi1) H(psi-1)
  double backward_product = 0;  // same for H(psi-1) H(psi1)
  double product_symbol = 0;    // same for H(psi1 psi-1)
};

struct DiagnosticsRecord {
  double alpha = 0;
  int n = 0;
  long N = 0;
  double min_sv_plus = 0;   // I + H_N(u_{-1/2,1})
  double min_sv_minus = 0;  // I - H_N(u_{1/2,1})
  double min_sv_psi = 0;    // I + H_N(psi_{alpha,n})
  std::vector<TraceNormSample> trace_norm_sweep;
  double projection_defect = 0;  // H_N(h_alpha), leading 16 x 16 block
  std::vector<double> leading_sv_psi1;  // H_N(psi^{(1)}_{alpha,n})
  std::vector<double> leading_sv_u;     // H_N(u_{-1/2,1})
};

namespace detail {

// singular values of a real symmetric matrix, descending
inline std::vector<double> symmetric_singular_values(const Mat<double>& A) {
  Eigen::SelfAdjointEigenSolver<Mat<double>> es(A, Eigen::EigenvaluesOnly);
  std::vector<double> s(static_cast<size_t>(A.rows()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) s[i] = std::abs(es.eigenvalues()(i));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

inline double nuclear_norm(const Mat<double>& A) {
  Eigen::BDCSVD<Mat<double>> svd(A);
  return svd.singularValues().sum();
}

inline double min_singular_shifted(const Mat<double>& H, double sign) {
  Mat<double> A = sign * H;
  A.diagonal().array() += 1.0;
  return symmetric_singular_values(A).back();
}

}  // namespace detail

inline DiagnosticsRecord operator_diagnostics(double alpha, int n, long N,
                                              const std::vector<double>& mus = {0.9, 0.99, 0.999},
                                              int leading = 8) {
  if (N < 64) throw UsageError("operator_diagnostics needs N >= 64");
  DiagnosticsRecord d;
  d.alpha = alpha;
  d.n = n;
  d.N = N;
  const Mat<double> Hu_minus_half = detail::real_hankel(CircleSymbol::u_jump(-0.5, 1), N);
  d.min_sv_plus = detail::min_singular_shifted(Hu_minus_half, 1.0);
  d.min_sv_minus = detail::min_singular_shifted(detail::real_hankel(CircleSymbol::u_jump(0.5, 1), N), -1.0);
  d.min_sv_psi = detail::min_singular_shifted(detail::real_hankel(CircleSymbol::psi_full(alpha, n), N), 1.0);

  for (double mu : mus) {
    const CircleSymbol p1 = CircleSymbol::psi_singular_mu(mu, 1);
    const CircleSymbol pm = CircleSymbol::psi_singular_mu(mu, -1);
    const auto c1 = fourier_coeffs(p1, 0, 2 * N);
    const auto cm = fourier_coeffs(pm, 0, 2 * N);
    // psi1 psi-1 = psi_full - psi1 - psi-1 - 1, all with known coefficients
    const auto cf = fourier_coeffs(CircleSymbol::psi_full_mu(mu), 0, 2 * N);
    std::vector<double> prod(cf.size());
    for (size_t k = 0; k < cf.size(); ++k) prod[k] = (cf[k] - c1[k] - cm[k]).real() - (k == 0 ? 1.0 : 0.0);
    const int m = static_cast<int>(N);
    const Mat<double> H1 = hankel_matrix(detail::coefficient_cast<double>(c1), 0, m);
    const Mat<double> Hm = hankel_matrix(detail::coefficient_cast<double>(cm), 0, m);
    TraceNormSample s;
    s.mu = mu;
    s.forward_product = detail::nuclear_norm(H1 * Hm);
    s.backward_product = detail::nuclear_norm(Hm * H1);
    const auto sv = detail::symmetric_singular_values(hankel_matrix(prod, 0, m));
    for (double x : sv) s.product_symbol += x;
    d.trace_norm_sweep.push_back(s);
  }

  d.projection_defect = projection_defect(detail::real_hankel(CircleSymbol::h_exp(alpha), N));

  const auto sv_psi1 = detail::symmetric_singular_values(detail::real_hankel(CircleSymbol::psi_singular(alpha, n, 1), N));
  const auto sv_u = detail::symmetric_singular_values(Hu_minus_half);
  const size_t L = std::min<size_t>(static_cast<size_t>(leading), sv_u.size());
  d.leading_sv_psi1.assign(sv_psi1.begin(), sv_psi1.begin() + L);
  d.leading_sv_u.assign(sv_u.begin(), sv_u.begin() + L);
  return d;
}

}  // namespace sinegap
