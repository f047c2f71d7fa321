#pragma once

#include <stdexcept>
#include <string>

namespace nilproj {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition or invariant failed (CLI exit code 1).
class MathError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad indices, parameters, or files (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public MathError {
 public:
  using MathError::MathError;
};

class SingularBasis : public MathError {
 public:
  using MathError::MathError;
};

class NotTransversal : public MathError {
 public:
  using MathError::MathError;
};

/// Jacobi identity fails on a basis triple; indices are 1-based.
class JacobiViolation : public MathError {
 public:
  JacobiViolation(int i, int j, int k)
      : MathError("Jacobi identity fails on basis triple (" + std::to_string(i) + ", " +
                  std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  int i, j, k;
};

class NotNilpotent : public MathError {
 public:
  explicit NotNilpotent(const std::string& what) : MathError(what), witness_index(0), power(0) {}
  NotNilpotent(int index, int power)
      : MathError("algebra is not nilpotent: (ad X_" + std::to_string(index) + ")^" +
                  std::to_string(power) + " != 0"),
        witness_index(index),
        power(power) {}
  int witness_index;  // 1-based basis index, 0 if no single-vector witness was found
  int power;
};

class NotASubalgebra : public MathError {
 public:
  using MathError::MathError;
};

class NotJordanHolder : public MathError {
 public:
  using MathError::MathError;
};

class WrongJumpSet : public MathError {
 public:
  using MathError::MathError;
};

class CellBoundaryCrossed : public MathError {
 public:
  using MathError::MathError;
};

class BadIndex : public InputError {
 public:
  using InputError::InputError;
};

class BadParameter : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace nilproj
