// Exception hierarchy shared across the library.

#ifndef DERHAM_ERRORS_HPP
#define DERHAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace derham {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input stream; carries a 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(std::string message, long line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(message)
                       : std::move(message)),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

/// Inconsistent combinatorial data: unknown simplex, duplicate simplex,
/// vertex id out of range, quotient containment violation.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Dimension or size mismatch between arguments (contract violation).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Orientation-dependent operation requested on a complex that is not a
/// closed oriented manifold.
class OrientationError : public Error {
 public:
  using Error::Error;
};

}  // namespace derham

#endif
