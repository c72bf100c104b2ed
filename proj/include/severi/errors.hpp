#pragma once

#include <stdexcept>
#include <string>

namespace severi {

/// Base class for errors caused by the caller's input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is out of its admissible range (e.g. a minor size).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An input lies outside the domain of an operation (e.g. nonzero row sums for an HSNF).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Points whose differences do not span a rank-two lattice.
class DegenerateSpanError : public Error {
 public:
  using Error::Error;
};

/// A lattice quotient does not have the structure an operation requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A computed result contradicts a proven identity. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace severi
