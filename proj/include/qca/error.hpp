#pragma once

#include <stdexcept>
#include <string>

namespace qca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands belong to different quantum tori.
struct ContextMismatch : Error {
  using Error::Error;
};

/// Raised by division and basis expansion when the step cap is exhausted or
/// an irreducible remainder is left.
struct NotDivisible : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace qca
