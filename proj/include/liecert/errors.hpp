#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace liecert {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or length mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid scalar argument (non-prime modulus, negative modulus, bad parameter).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Two scalars from different prime fields were combined.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// A structure table violates antisymmetry or the Jacobi identity.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, std::array<std::size_t, 3> triple)
      : Error(what), triple_(triple) {}
  std::array<std::size_t, 3> triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

/// An operation was called on an input that does not meet its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must always hold was violated. Signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace liecert
