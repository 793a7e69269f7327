#pragma once

#include <stdexcept>
#include <string>

namespace locert {

/// Base class for every error raised by the library. Input errors and
/// internal-consistency failures are distinguished by subclass.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, polynomials, presentations, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Handle reduction hit its iteration cap. Termination is a theorem, so
/// this always indicates a bug rather than a "don't know".
class StepCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search that is bounded by a proven inequality failed to terminate
/// inside the bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrimitive : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class NameClash : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class RuleInapplicable : public Error {
 public:
  using Error::Error;
};

class NotAlexanderNormalized : public Error {
 public:
  using Error::Error;
};

}  // namespace locert
