#pragma once

#include <stdexcept>
#include <string>

namespace latqmc {

/// Raised when an input violates an operation's precondition
/// (bad dimension, out-of-range parameter, composite modulus where a prime
/// is required, ...). The CLI maps it to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a size or numerical guard trips (subset explosion, point
/// count too large for an O(N^2) evaluation, integer overflow). Exit code 3.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latqmc
