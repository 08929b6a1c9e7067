#ifndef KOENIGSLAB_ERRORS_HPP
#define KOENIGSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace koenigslab {

/// Caller broke an API contract: mismatched truncation orders, out-of-range
/// indices, malformed input text. Maps to CLI exit code 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is outside the mathematical domain of the operation (point on or
/// outside the unit circle, symbol that is not a self-map, multiplier on the
/// unit circle where a Schroeder model is required). Also exit code 2.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative scheme ran out of its step budget before reaching tolerance.
/// Carries the last residual seen so callers can report how close it got.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// A linear-algebra step is too ill conditioned for its result to be trusted.
class ill_conditioned_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace koenigslab

#endif  // KOENIGSLAB_ERRORS_HPP
