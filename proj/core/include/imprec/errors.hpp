#pragma once

#include <stdexcept>
#include <string>

namespace imprec {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix/vector dimensions do not line up.
struct ShapeError : Error {
  using Error::Error;
};

/// An argument is outside its admissible range (index, weight, empty list).
struct DomainError : Error {
  using Error::Error;
};

/// Two grades that must carry disjoint choice names overlap, or the same
/// name is declared with conflicting arities.
struct NameClashError : Error {
  using Error::Error;
};

/// An operation received morphisms at incompatible grades.
struct GradeMismatchError : Error {
  using Error::Error;
};

struct TypeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// A property that is guaranteed by construction failed to hold. Unlike
/// Error this indicates a bug in the library, not bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace imprec
