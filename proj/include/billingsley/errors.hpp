#pragma once

#include <stdexcept>
#include <string>

namespace billingsley {

// Invalid construction parameters (step sizes, limits, counts).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation's precondition on its geometric input does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested size exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical procedure failed to reach its tolerance. Carries the best
// estimate obtained before giving up.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double partial_estimate)
      : std::runtime_error(what), partial_(partial_estimate) {}

  double partial_estimate() const noexcept { return partial_; }

 private:
  double partial_;
};

}  // namespace billingsley
