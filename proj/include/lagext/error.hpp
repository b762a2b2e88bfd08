#pragma once

#include <stdexcept>
#include <string>

namespace lagext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input was not met (not an ideal, not flat, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Two computations that must agree did not. Signals a bug or a
/// counterexample worth reporting; never a user mistake.
class IntegrityError : public Error {
public:
  using Error::Error;
};

} // namespace lagext
