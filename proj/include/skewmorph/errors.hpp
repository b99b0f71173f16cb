#pragma once

#include <stdexcept>
#include <string>

namespace skewmorph {

/// Operand shapes do not agree (e.g. multiplying matrices of different order).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An argument violates an operation's precondition (q not a prime power, n even, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An input object fails one of its structural invariants.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed PM or QUH text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skewmorph
