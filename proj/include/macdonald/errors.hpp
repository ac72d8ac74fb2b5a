#pragma once

#include <stdexcept>
#include <string>

namespace macdonald {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A specialized parameter value makes a needed quantity vanish or two
/// interpolation points coincide.
class SpecializationCollision : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSubstitution : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (e.g. a nonzero remainder in an exact division).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace macdonald
