#pragma once

#include <stdexcept>
#include <string>

namespace cubictheta {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

/// Terms carrying different powers of pi were combined additively.
class PiGradeMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Requested a coefficient beyond the truncation bound.
class UnknownCoefficient : public Error {
 public:
  using Error::Error;
};

class PointIsZero : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

/// A series name, table kind or similar selector that does not exist.
class UnknownName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubictheta
