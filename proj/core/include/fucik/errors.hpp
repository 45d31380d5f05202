#pragma once

#include <stdexcept>
#include <string>

namespace fucik {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Point does not satisfy the equation of the requested spectrum curve.
class OffCurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Point lies on the reflected odd curve, which this library does not model.
/// Swap (alpha, beta) and negate the eigenfunction to use it.
class ReflectedCurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation requested too close to a junction between two bumps.
class JunctionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Argument too close to a pole of a meromorphic closed form.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Adaptive quadrature hit its recursion limit before reaching tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed structured-text input (system specs, CLI arguments).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fucik
