#pragma once

#include <stdexcept>
#include <string>

namespace gres {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor check failed: ill-defined map, broken simplicial identity,
/// non-square-zero differential, ...
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The requested degree needs more levels than the truncation provides.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured generator bound.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Arguments are of the wrong shape or over mismatched rings.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gres
