#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "toric/numbers.hpp"

namespace toric {

struct ToricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions.
struct DimensionError : ToricError {
  using ToricError::ToricError;
};

/// An operation was called outside its stated precondition
/// (non-smooth fan, origin not interior, invalid fan, ...).
struct PreconditionError : ToricError {
  using ToricError::ToricError;
};

/// Malformed input (JSON shape, out-of-range index, non-integer coefficient).
struct ParseError : ToricError {
  using ToricError::ToricError;
};

/// A polyhedron expected to be bounded is not; carries a recession
/// direction as the certificate.
struct UnboundedError : ToricError {
  Vec direction;
  UnboundedError(const std::string& msg, Vec dir)
      : ToricError(msg), direction(std::move(dir)) {}
};

}  // namespace toric
