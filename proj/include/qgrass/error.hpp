#pragma once

#include <stdexcept>
#include <string>

namespace qgrass {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero in Q(q)") {}
};

/// An evaluation point that is forbidden (0, 1, -1) or a pole of the function.
class EvaluationError : public Error {
public:
  using Error::Error;
};

/// Bad indices, shapes or ambients.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A precondition on a derivation or element was not met.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed; the message describes the witness.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace qgrass
