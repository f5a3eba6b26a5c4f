#pragma once

#include <stdexcept>
#include <string>

namespace symcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map or form was evaluated outside the set where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operand sizes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A projective representative is (numerically) the zero vector.
class DegeneratePointError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested inside the branch margin of the quadric.
class BranchLocusError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A documented precondition on the input was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A linear-algebra step lost rank (orthonormalization, symplectic solve).
class NumericalRankError : public Error {
 public:
  using Error::Error;
};

/// Bad request to the verifier (unknown check, invalid parameters, empty suite).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcut
