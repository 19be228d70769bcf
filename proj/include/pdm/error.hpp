#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Parameter set or input violates a documented invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula is evaluated outside its domain (negative radicand, sigma = 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested state has no bound level for the given parameters.
class BoundStateError : public std::runtime_error {
 public:
  BoundStateError(const std::string& what, double diagnostic)
      : std::runtime_error(what), diagnostic_(diagnostic) {}

  /// The offending quantity (effective angular momentum, radicand, ...).
  double diagnostic() const noexcept { return diagnostic_; }

 private:
  double diagnostic_;
};

}  // namespace pdm
