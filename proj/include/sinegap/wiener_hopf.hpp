#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sinegap/circle_symbols.hpp"
#include "sinegap/fourier.hpp"

namespace sinegap {

struct FactorizationOptions {
  double tail_tolerance = 1e-14;  // |[log a]_k| on the upper half of the grid spectrum
  int min_log2 = 10;
  int max_log2 = 20;
  double reconstruction_tolerance = 1e-10;
  bool multiply_by_chi = false;
};

// a = a_+(1/t) G a_+(t) for an even symbol a.
struct FactorizationResult {
  CircleSymbol a_plus;  // a_+(t) = sum_{k>=0} c_k t^k with c_0 = 1
  double G = 1;
  CircleSymbol psi;     // a_+(1/t)/a_+(t), times sign_chi if requested
  double reconstruction_error = 0;
  long grid_size = 0;
};

inline FactorizationResult wiener_hopf_factor_even(const CircleSymbol& a,
                                                   const FactorizationOptions& opt = {}) {
  using detail::grid_angle;
  using detail::kTwoPi;
  std::vector<cplx> logc;
  long M = 0;
  for (int lg = opt.min_log2;; ++lg) {
    M = 1L << lg;
    std::vector<cplx> v(static_cast<size_t>(M));
    double vmax = 0, vmin = HUGE_VAL;
    for (long j = 0; j < M; ++j) {
      v[j] = a.at_angle(grid_angle(j, M));
      vmax = std::max(vmax, std::abs(v[j]));
      vmin = std::min(vmin, std::abs(v[j]));
    }
    if (!(vmin > 1e-14 * vmax)) throw DomainError("symbol vanishes on the evaluation grid");
    // grid points j and M-1-j are mirror images, theta -> 2 pi - theta
    for (long j = 0; j < M / 2; ++j)
      if (std::abs(v[j] - v[M - 1 - j]) > 1e-12 * vmax)
        throw DomainError("symbol is not even: a(t) != a(1/t)");
    std::vector<cplx> lg_samples(static_cast<size_t>(M));
    double arg = std::arg(v[0]), total = 0;
    for (long j = 0; j < M; ++j) {
      if (j > 0) {
        const double step = std::remainder(std::arg(v[j]) - std::arg(v[j - 1]), kTwoPi);
        arg += step;
        total += step;
      }
      lg_samples[j] = cplx(std::log(std::abs(v[j])), arg);
    }
    total += std::remainder(std::arg(v[0]) - std::arg(v[M - 1]), kTwoPi);
    const long winding = std::lround(total / kTwoPi);
    if (winding != 0)
      throw DomainError("symbol has winding number " + std::to_string(winding) + ", expected 0");
    logc = detail::coefficients_from_samples(lg_samples);
    double tail = 0;
    for (long k = M / 4; k < M / 2; ++k)
      tail = std::max({tail, std::abs(detail::grid_at(logc, k)), std::abs(detail::grid_at(logc, -k))});
    if (tail <= opt.tail_tolerance) break;
    if (lg >= opt.max_log2)
      throw AccuracyError("coefficients of log a do not decay: tail " + std::to_string(tail) +
                          " at grid size " + std::to_string(M));
  }

  const cplx l0 = detail::grid_at(logc, 0);
  if (std::abs(l0.imag()) > 1e-10)
    throw DomainError("geometric mean of the symbol is not positive (arg " + std::to_string(l0.imag()) + ")");

  // a_+ = exp(sum_{k>=1} l_k t^k) by the power-series recurrence
  //   k c_k = sum_{j=1}^k j l_j c_{k-j},  c_0 = 1 exactly.
  double lmax = 0;
  for (long k = 1; k < M / 2; ++k) lmax = std::max(lmax, std::abs(detail::grid_at(logc, k)));
  long K = 0;
  for (long k = 1; k < M / 2; ++k)
    if (std::abs(detail::grid_at(logc, k)) > 1e-16 * std::max(lmax, 1.0)) K = k;
  const long Kc = std::min(M / 2 - 1, std::max(4 * K, 16L));
  std::vector<cplx> c(static_cast<size_t>(Kc + 1), 0.0);
  c[0] = 1.0;
  for (long k = 1; k <= Kc; ++k) {
    cplx s = 0;
    for (long j = 1; j <= std::min(k, K); ++j) s += double(j) * detail::grid_at(logc, j) * c[k - j];
    c[k] = s / double(k);
  }
  double cmax = 0;
  for (const cplx& z : c) cmax = std::max(cmax, std::abs(z));
  while (c.size() > 1 && std::abs(c.back()) <= 1e-16 * cmax) c.pop_back();

  FactorizationResult out{CircleSymbol::smooth_user(c, 0), std::exp(l0.real()),
                          CircleSymbol::wiener_hopf_psi(c, opt.multiply_by_chi), 0.0, M};

  // reconstruction a = a_+(1/t) G a_+(t) on a grid offset from the FFT nodes
  double err = 0;
  const int checks = 997;
  for (int j = 0; j < checks; ++j) {
    const double theta = kTwoPi * (j + 0.37) / checks;
    const cplx t = std::polar(1.0, theta);
    const cplx rebuilt = out.a_plus(1.0 / t) * out.G * out.a_plus(t);
    const cplx want = a.at_angle(theta);
    err = std::max(err, std::abs(rebuilt - want) / std::max(1.0, std::abs(want)));
  }
  out.reconstruction_error = err;
  if (err > opt.reconstruction_tolerance)
    throw AccuracyError("Wiener-Hopf reconstruction error " + std::to_string(err));
  return out;
}

}  // namespace sinegap
