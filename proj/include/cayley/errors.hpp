#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or schema-violating input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Dimension, degree or other contract violation of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Spanning vectors of a plane are linearly dependent.
class DegeneratePlaneError : public PreconditionError {
 public:
  DegeneratePlaneError() : PreconditionError("degenerate plane") {}
  explicit DegeneratePlaneError(const std::string& what) : PreconditionError("degenerate plane: " + what) {}
};

/// An index formula would have to halve an odd integer (CLI exit code 1).
class ParityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
