#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe a valid object (bad coordinates, bad JSON,
/// wrong entry count, ...). The CLI maps this to exit code 2.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A valid object was passed to an operation outside its domain
/// (non-prime characteristic, non-invertible twist exponent, conductor
/// mismatch, size over a configured cap, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace jacobi
