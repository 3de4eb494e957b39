#pragma once

#include <stdexcept>
#include <string>

namespace dynheight {

/// Malformed or mathematically invalid input (degree mismatch, Res = 0,
/// diagonal pairing, duplicate points, ...). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation defined only for some degrees (e.g. Milnor coordinates, d = 2).
class UnsupportedDegree : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A precondition the underlying theorem needs was not met, or a cost guard
/// tripped; no claim can be made.
class Refused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace dynheight
