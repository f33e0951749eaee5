#pragma once

#include <stdexcept>
#include <string>

namespace kanren {

/// Misuse of the API, e.g. a logic variable used outside the run that created it.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Projection of a value that still contains free variables.
class NotAValue : public std::runtime_error {
 public:
  NotAValue() : std::runtime_error("not a value") {}
};

/// A term whose shape does not match the type it is being decoded as.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kanren
