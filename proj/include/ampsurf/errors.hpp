#pragma once

#include <stdexcept>
#include <string>

namespace ampsurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (surface names, characters, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two divisor classes or characters living on different surfaces were combined.
class SurfaceMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A derived identity that must hold failed. Always a bug or a broken assumption.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ampsurf
