#pragma once

#include <stdexcept>
#include <string>

namespace m1n {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A marking index outside {1, ..., n}.
struct MarkingIndexError : Error {
  using Error::Error;
};

// Operands living on different moduli spaces (different n or g).
struct SpaceMismatchError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Raised when a computation would exceed a configured size cap.
struct ResourceGuardError : Error {
  using Error::Error;
};

// A quotient that was required to be exact left a remainder.
struct IntegralityError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

} // namespace m1n
