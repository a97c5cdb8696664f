#pragma once

#include <stdexcept>
#include <string>

namespace mpinv {

/// Base for all semantic failures raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operand shapes or indices do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A subspace was expected to lie inside another one and does not.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// A decomposition is not a direct sum or not invariant under the map.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// Two block operators do not share the same block geometry.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or file input. Kept separate from Error so the CLI can
/// map it to its own exit code.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpinv
