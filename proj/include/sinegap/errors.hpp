#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace sinegap {

// Bad request: unknown names, parameters outside their documented range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An engine could not reach its accuracy target. The last two iterates of the
// failing refinement are kept so callers can report how far apart they were.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what,
                         double previous = std::numeric_limits<double>::quiet_NaN(),
                         double last = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(what), previous_(previous), last_(last) {}

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

// A mathematical precondition does not hold (singular truncation, nonzero
// winding, degenerate arc).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sinegap
