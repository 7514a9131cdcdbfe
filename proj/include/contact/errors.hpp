#pragma once

#include <stdexcept>
#include <string>

namespace contact {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Algebra family parameters out of the admissible range.
struct InvalidSpec : Error {
  using Error::Error;
};

/// An internal invariant of a freshly built algebra failed (a bug, not user error).
struct ConstructionFailure : Error {
  using Error::Error;
};

/// Operands belong to different algebra instances.
struct AlgebraMismatch : Error {
  using Error::Error;
};

struct NotNilpotentPart : Error {
  using Error::Error;
};

struct NotInParabolic : Error {
  using Error::Error;
};

struct NotFound : Error {
  using Error::Error;
};

struct NotASymmetry : Error {
  using Error::Error;
};

struct UnsupportedFamily : Error {
  using Error::Error;
};

struct ZeroInput : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

}  // namespace contact
