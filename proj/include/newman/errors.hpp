#pragma once

#include <stdexcept>

namespace newman {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration or scan range above the configured limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

// Bad argument or violated precondition (maps to CLI usage errors).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LevelOutOfRange : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not; always an arithmetic bug.
class ArithmeticMismatch : public Error {
 public:
  using Error::Error;
};

// Floating evaluation could not be rounded with confidence.
class PrecisionFailure : public Error {
 public:
  using Error::Error;
};

class StorageError : public Error {
 public:
  using Error::Error;
};

}  // namespace newman
