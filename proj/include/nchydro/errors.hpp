#pragma once

#include <stdexcept>
#include <string>

namespace nchydro {

/// Argument outside an operation's physical or numerical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested expectation value <r^-k> does not exist for the given state.
class DivergentMoment : public DomainError {
 public:
  using DomainError::DomainError;
};

/// First-order level correction does not exist (l = 0 or l = 1).
class DivergentCorrection : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A refinement limit was hit before the tolerance target; the best
/// estimate obtained so far is carried along.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double best_estimate, double error_estimate)
      : std::runtime_error(msg), best_(best_estimate), err_(error_estimate) {}

  double best_estimate() const { return best_; }
  double error_estimate() const { return err_; }

 private:
  double best_;
  double err_;
};

}  // namespace nchydro
