#pragma once

#include <stdexcept>
#include <string>

namespace sgdgs {

/// Operand shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that had to be inverted has determinant zero.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
  // Determinant of the offending matrix; always zero.
  int determinant() const noexcept { return 0; }
};

/// Malformed text input (graphs, matrices, polynomials).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on input outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured size ceiling.
class ResourceGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A mathematical identity that must hold failed; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sgdgs
