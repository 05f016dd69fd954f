#pragma once

// Seeded invariant suites over the library. Randomized properties draw
// their cases from a per-property generator, so a failure is reproducible
// from (suite, seed) alone.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eatpc {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first failing case, empty when none failed.
  std::string first_failure;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const;
  std::size_t cases() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed2024;
  /// Cases per randomized property. Exhaustive properties ignore it.
  std::size_t cases = 200;
};

/// "gf2", "rm", "tpc", "ea", "rate"
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws ValidationError
/// on an unknown name.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options = {});

}  // namespace eatpc
