#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eatpc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: shape mismatches, out-of-range code parameters,
/// infeasible constructions, malformed input text.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a configured capacity cap (matrix size, enumeration
/// budget). The message names the cap that would be required.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Desk-scale defaults. Every entry point that can blow up takes its cap
/// as an explicit argument defaulting to one of these.
struct Limits {
  static constexpr unsigned kMaxEvalVariables = 24;
  static constexpr std::uint64_t kBruteForceCodewords = std::uint64_t{1} << 20;
  static constexpr unsigned kContainmentVariables = 12;
  static constexpr std::uint64_t kDirectEbitLength = 4096;
};

}  // namespace eatpc
