#pragma once

#include <stdexcept>
#include <string>

namespace chromgl {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation hit a pole (division by zero).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An exact quotient was requested but the divisor does not divide.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// An input exceeded the enumeration limits of an operation.
class SizeGuard : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-domain input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chromgl
