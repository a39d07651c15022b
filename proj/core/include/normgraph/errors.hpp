#pragma once

#include <stdexcept>
#include <string>

namespace normgraph {

/// Division by zero in F_p or in an extension field.
class ZeroInverseError : public std::domain_error {
 public:
  ZeroInverseError() : std::domain_error("inverse of zero") {}
};

/// Operands come from fields or polynomial domains that do not match.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A randomized splitting routine was handed input violating its precondition.
class NonSplittingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine would exceed its configured work or memory guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A witness construction produced colliding vertices or a zero second coordinate.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace normgraph
