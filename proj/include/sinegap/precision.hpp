#pragma once

#include <boost/multiprecision/float128.hpp>

#include <string>
#include <string_view>

#include "sinegap/errors.hpp"

namespace sinegap {

// Software quad precision (113-bit mantissa). Used where double runs into its
// rounding floor: large-alpha Nystrom, moment Hankel matrices with n > 12.
using Extended = boost::multiprecision::float128;

enum class Precision { binary64, extended };

inline std::string_view to_string(Precision p) {
  return p == Precision::extended ? "extended" : "double";
}

inline Precision parse_precision(std::string_view s) {
  if (s == "double") return Precision::binary64;
  if (s == "extended") return Precision::extended;
  throw UsageError("unknown precision '" + std::string(s) + "' (expected double or extended)");
}

template <typename Real>
inline double to_double(const Real& x) {
  return static_cast<double>(x);
}

}  // namespace sinegap
