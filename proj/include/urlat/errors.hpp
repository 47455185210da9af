#pragma once

#include <stdexcept>

namespace urlat {

/// Input could not be parsed or violates a representation invariant.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different dimensions.
struct DimMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pointwise tail arithmetic has no closed form for these operands.
struct TailIncompatible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated contract.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace urlat
