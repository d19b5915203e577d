#pragma once

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sinegap/circle_symbols.hpp"
#include "sinegap/errors.hpp"

namespace sinegap {

struct FourierOptions {
  double tolerance = 1e-12;  // absolute agreement required between grids M and 2M
  int min_log2 = 14;
  int max_log2 = 20;
};

namespace detail {

// Trapezoidal coefficients from M samples on the half-shifted grid
// theta_j = 2 pi (j + 1/2)/M, so that +-1 and other common jump points are
// never nodes. Entry k + M/2 holds the coefficient of t^k, -M/2 <= k < M/2.
inline double grid_angle(long j, long M) { return kTwoPi * (j + 0.5) / M; }

inline std::vector<cplx> coefficients_from_samples(const std::vector<cplx>& samples) {
  const long M = static_cast<long>(samples.size());
  std::vector<cplx> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, samples);
  std::vector<cplx> out(static_cast<size_t>(M));
  for (long k = -M / 2; k < M / 2; ++k) {
    const long idx = ((k % M) + M) % M;
    out[k + M / 2] = spectrum[idx] * std::polar(1.0 / M, -kPi * k / M);
  }
  return out;
}

template <typename F>
std::vector<cplx> grid_coefficients(F&& f, long M) {
  std::vector<cplx> samples(static_cast<size_t>(M));
  for (long j = 0; j < M; ++j) samples[j] = f(grid_angle(j, M));
  return coefficients_from_samples(samples);
}

inline cplx grid_at(const std::vector<cplx>& g, long k) {
  const long M = static_cast<long>(g.size());
  if (k < -M / 2 || k >= M / 2) return 0.0;
  return g[k + M / 2];
}

inline long next_pow2_log(long x) {
  long l = 0;
  while ((1L << l) < x) ++l;
  return l;
}

// Coefficients of a function that is analytic in an annulus around the circle.
// Doubles the grid until two resolutions agree and the upper half of the
// spectrum has decayed below the tolerance.
template <typename F>
std::vector<cplx> smooth_grid_coefficients(F&& f, long k_reach, const FourierOptions& opt) {
  long log2 = std::max<long>(opt.min_log2, next_pow2_log(2 * k_reach + 2));
  const long top = std::max<long>(opt.max_log2, log2 + 1);
  std::vector<cplx> prev;
  double last_gap = 0, prev_val = 0, last_val = 0;
  for (; log2 <= top; ++log2) {
    const long M = 1L << log2;
    std::vector<cplx> cur = grid_coefficients(f, M);
    if (!prev.empty()) {
      double gap = 0, scale = 1;
      const long half = M / 4;
      for (long k = -half; k < half; ++k) {
        const double d = std::abs(grid_at(cur, k) - grid_at(prev, k));
        if (d > gap) {
          gap = d;
          prev_val = grid_at(prev, k).real();
          last_val = grid_at(cur, k).real();
        }
        scale = std::max(scale, std::abs(grid_at(cur, k)));
      }
      for (long k = -M / 2; k < M / 2; ++k)
        if (k < -half || k >= half) gap = std::max(gap, std::abs(grid_at(cur, k)));
      last_gap = gap;
      if (gap <= opt.tolerance * scale) return cur;
    }
    prev = std::move(cur);
  }
  throw AccuracyError("Fourier coefficients did not converge by grid size 2^" +
                          std::to_string(top) + " (grid gap " + std::to_string(last_gap) + ")",
                      prev_val, last_val);
}

inline std::vector<cplx> factored_coefficients(const CircleSymbol& a, long k_min, long k_max,
                                               const FourierOptions& opt) {
  const long reach = std::max(std::abs(k_min), std::abs(k_max));
  auto smooth = [&a](double theta) { return a.smooth_factor(std::polar(1.0, theta)); };
  // the jump factor convolution only needs S to the level where it has decayed
  const std::vector<cplx> S =
      smooth_grid_coefficients(smooth, a.has_jump_factor() ? 0 : reach, opt);
  const long M = static_cast<long>(S.size());
  std::vector<cplx> out(static_cast<size_t>(k_max - k_min + 1), 0.0);

  if (!a.has_jump_factor()) {
    for (long k = k_min; k <= k_max; ++k) out[k - k_min] = grid_at(S, k);
  } else {
    double smax = 0;
    for (const cplx& c : S) smax = std::max(smax, std::abs(c));
    long L = 0;
    for (long k = -M / 2; k < M / 2; ++k)
      if (std::abs(grid_at(S, k)) > 1e-18 * smax) L = std::max(L, std::abs(k));
    const std::vector<cplx> J = a.jump_factor().closed_form_coefficients(k_min - L, k_max + L);
    // out_k = sum_l S_l J_{k-l}
    for (long l = -L; l <= L; ++l) {
      const cplx s = grid_at(S, l);
      if (s == 0.0) continue;
      const cplx* jrow = J.data() + (k_min - l) - (k_min - L);
      for (long i = 0; i <= k_max - k_min; ++i) out[i] += s * jrow[i];
    }
  }
  if (k_min <= 0 && k_max >= 0) out[-k_min] += a.offset();
  return out;
}

// Any bounded symbol: subtract sawtooth multiples at the known jumps so the
// remainder is continuous, transform it, and add the sawtooth coefficients
// back in closed form. The sawtooth with unit jump at tau has
// saw_k = tau^{-k}/(2 pi i k), saw_0 = 0.
inline std::vector<cplx> generic_coefficients(const CircleSymbol& a, long k_min, long k_max,
                                              const FourierOptions& opt) {
  std::vector<Singularity> jumps;
  for (const auto& s : a.singularities())
    if (s.type == SingularityType::jump) jumps.push_back(s);
  auto remainder = [&](double theta) {
    cplx v = a.at_angle(theta);
    for (const auto& s : jumps) {
      const double phi = angle_from(theta, std::arg(s.point));
      const double saw = phi == 0 ? 0.0 : (kPi - phi) / kTwoPi;
      v -= s.jump * saw;
    }
    return v;
  };
  const long reach = std::max(std::abs(k_min), std::abs(k_max));
  long log2 = std::max<long>(opt.min_log2, next_pow2_log(4 * reach + 4));
  const long top = std::max<long>(opt.max_log2, log2 + 1);
  std::vector<cplx> prev;
  double prev_val = 0, last_val = 0, gap = 0;
  bool converged = false;
  for (; log2 <= top && !converged; ++log2) {
    std::vector<cplx> cur = grid_coefficients(remainder, 1L << log2);
    if (!prev.empty()) {
      gap = 0;
      for (long k = k_min; k <= k_max; ++k) {
        const double d = std::abs(grid_at(cur, k) - grid_at(prev, k));
        if (d > gap) {
          gap = d;
          prev_val = grid_at(prev, k).real();
          last_val = grid_at(cur, k).real();
        }
      }
      converged = gap <= opt.tolerance;
    }
    prev = std::move(cur);
  }
  if (!converged)
    throw AccuracyError("Fourier coefficients did not converge by grid size 2^" + std::to_string(top) +
                            " (grid gap " + std::to_string(gap) + ")",
                        prev_val, last_val);
  std::vector<cplx> out(static_cast<size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k) {
    cplx v = grid_at(prev, k);
    if (k != 0)
      for (const auto& s : jumps) v += s.jump * std::polar(1.0, -std::arg(s.point) * k) / cplx(0, kTwoPi * k);
    out[k - k_min] = v;
  }
  return out;
}

}  // namespace detail

// Fourier coefficients a_k, k_min <= k <= k_max, of a symbol on the circle.
inline std::vector<cplx> fourier_coeffs(const CircleSymbol& a, long k_min, long k_max,
                                        const FourierOptions& opt = {}) {
  if (k_min > k_max) throw UsageError("fourier_coeffs needs k_min <= k_max");
  if (a.has_closed_form_coefficients()) return a.closed_form_coefficients(k_min, k_max);
  if (!a.is_bounded()) throw UsageError("fourier_coeffs needs a bounded symbol");
  if (a.is_factored()) return detail::factored_coefficients(a, k_min, k_max, opt);
  return detail::generic_coefficients(a, k_min, k_max, opt);
}

// Real parts, after checking that the imaginary parts are rounding noise.
inline bool coefficients_are_real(const std::vector<cplx>& c, double tol = 1e-13) {
  double scale = 0, im = 0;
  for (const cplx& z : c) {
    scale = std::max(scale, std::abs(z));
    im = std::max(im, std::abs(z.imag()));
  }
  return im <= tol * std::max(1.0, scale);
}

inline std::vector<double> real_parts(const std::vector<cplx>& c) {
  std::vector<double> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i].real();
  return r;
}

}  // namespace sinegap
