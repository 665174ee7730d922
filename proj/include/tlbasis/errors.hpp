#pragma once

#include <stdexcept>
#include <string>

namespace tlbasis {

// Input violates an operation's precondition (bad rank, set not in range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Serialized input is malformed: bad JSON or missing and mistyped fields.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Never expected on valid input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tlbasis
