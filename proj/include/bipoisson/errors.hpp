#pragma once

#include <stdexcept>
#include <string>

namespace bipoisson {

/// Malformed textual or file input (bad polynomial syntax, bad JSON schema).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bipoisson
