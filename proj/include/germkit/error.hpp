#ifndef GERMKIT_ERROR_HPP
#define GERMKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace germkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class SizeError : public Error {
public:
  using Error::Error;
};

/// An argument violated an operation's precondition (bad index, non-idempotent, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The algebraic structure does not have a property the operation needs.
class StructureError : public Error {
public:
  using Error::Error;
};

/// Two groupoid arrows were multiplied although they are not composable.
class ComposabilityError : public Error {
public:
  using Error::Error;
};

/// Malformed input file or value.
class InputError : public Error {
public:
  using Error::Error;
};

} // namespace germkit

#endif // GERMKIT_ERROR_HPP
