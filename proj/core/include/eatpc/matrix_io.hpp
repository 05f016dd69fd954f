#pragma once

// Plain-text matrix exchange format:
//
//   <rows> <cols>
//   0110...          one line of '0'/'1' per row, no separators
//
// Every line, including the last, ends with '\n'.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "eatpc/gf2.hpp"

namespace eatpc {

void write_matrix(std::ostream& out, const Gf2Matrix& m);
std::string to_text(const Gf2Matrix& m);

/// Throws ValidationError on malformed input.
Gf2Matrix read_matrix(std::istream& in);
Gf2Matrix parse_matrix(std::string_view text);
Gf2Matrix load_matrix(const std::filesystem::path& path);

}  // namespace eatpc
