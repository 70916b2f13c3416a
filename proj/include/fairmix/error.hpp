#pragma once

#include <stdexcept>
#include <string>

namespace fairmix {

/// Malformed input or a violated precondition. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant failed; indicates a bug, never bad input. Exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fairmix
