#pragma once

#include <stdexcept>
#include <string>

namespace tfreud {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid precision settings or other configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series or iteration failed to converge within its term budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_term_magnitude)
      : std::runtime_error(what), last_term_(last_term_magnitude) {}
  double last_term_magnitude() const noexcept { return last_term_; }

 private:
  double last_term_;
};

/// A recurrence step or a derived quantity can no longer be trusted at the
/// working precision. Carries the first failing index.
class PrecisionExhaustedError : public std::runtime_error {
 public:
  PrecisionExhaustedError(const std::string& what, int index)
      : std::runtime_error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Near-zero divisor in the Laguerre-Freud forward iteration.
class InstabilityError : public PrecisionExhaustedError {
 public:
  using PrecisionExhaustedError::PrecisionExhaustedError;
};

/// A gamma_n or h_n that must be positive came out non-positive.
class PositivityLossError : public PrecisionExhaustedError {
 public:
  using PrecisionExhaustedError::PrecisionExhaustedError;
};

/// Request beyond the stored length of a sequence or table.
class LengthError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Evaluation at a pole of a rational coefficient.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An expected structural property (e.g. real/imaginary split of the
/// ladder quartic's roots) did not hold.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tfreud
