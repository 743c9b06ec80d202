#pragma once

#include <stdexcept>
#include <string>

namespace commalg {

/// Root of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's contract: a unit ideal where a proper one is
/// required, a zerodivisor where a non-zerodivisor is required, malformed JSON.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two ideals (or an ideal and a complex) built over different variable sets.
class ContextMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Two independent computations of the same quantity disagreed. This always
/// indicates a defect in the engine and is never swallowed.
class MethodDisagreement : public Error {
 public:
  using Error::Error;
};

/// A truncated computation ran out of room before its answer was certified.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace commalg
