#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eatpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCapacity = 2;

/// Parses `args` (without the program name) and runs one subcommand.
/// Results go to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eatpc::cli
