#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>

#include "sinegap/precision.hpp"

namespace sinegap {

// Determinant carried as log|det| plus a unit phase. Raw determinants of the
// matrices here routinely under- or overflow double.
struct LogDetValue {
  double log_abs = 0.0;
  std::complex<double> phase{1.0, 0.0};
  bool degenerate = false;

  std::complex<double> value() const { return std::exp(log_abs) * phase; }

  LogDetValue& operator+=(const LogDetValue& o) {
    log_abs += o.log_abs;
    phase *= o.phase;
    phase /= std::abs(phase);
    degenerate = degenerate || o.degenerate;
    return *this;
  }
  LogDetValue& operator-=(const LogDetValue& o) {
    log_abs -= o.log_abs;
    phase /= o.phase;
    phase /= std::abs(phase);
    degenerate = degenerate || o.degenerate;
    return *this;
  }
  friend LogDetValue operator+(LogDetValue a, const LogDetValue& b) { return a += b; }
  friend LogDetValue operator-(LogDetValue a, const LogDetValue& b) { return a -= b; }
};

inline LogDetValue real_log(double x) {
  LogDetValue v;
  v.log_abs = x;
  return v;
}

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
double magnitude(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return std::abs(std::complex<double>(to_double(x.real()), to_double(x.imag())));
  } else {
    using std::abs;
    return to_double(abs(x));
  }
}

template <typename Scalar>
double log_magnitude(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return std::log(magnitude(x));
  } else {
    // keep the extra digits of the extended type until after the log
    using std::abs;
    using std::log;
    return to_double(log(abs(x)));
  }
}

template <typename Scalar>
std::complex<double> unit_phase(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    std::complex<double> z(to_double(x.real()), to_double(x.imag()));
    return z / std::abs(z);
  } else {
    return {x < 0 ? -1.0 : 1.0, 0.0};
  }
}

}  // namespace detail

// log-determinant from an existing partial-pivoting LU.
template <typename MatrixType>
LogDetValue log_det(const Eigen::PartialPivLU<MatrixType>& lu) {
  LogDetValue out;
  const auto& packed = lu.matrixLU();
  const Eigen::Index n = packed.rows();
  if (n == 0) return out;
  if (lu.permutationP().determinant() < 0) out.phase = -1.0;
  double scale = 0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, detail::magnitude(packed(i, i)));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = packed(i, i);
    const double mag = detail::magnitude(p);
    if (mag == 0.0 || mag < 1e-300 * scale) {
      out.degenerate = true;
      if (mag == 0.0) {
        out.log_abs = -std::numeric_limits<double>::infinity();
        continue;
      }
    }
    out.log_abs += detail::log_magnitude(p);
    out.phase *= detail::unit_phase(p);
  }
  out.phase /= std::abs(out.phase);
  return out;
}

template <typename Derived>
LogDetValue log_det(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  if (m.rows() != m.cols()) throw UsageError("log_det needs a square matrix");
  if (m.rows() == 0) return {};
  Eigen::PartialPivLU<Plain> lu(m.derived());
  return log_det(lu);
}

}  // namespace sinegap
