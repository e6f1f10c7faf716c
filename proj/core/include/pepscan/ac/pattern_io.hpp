#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"

namespace pepscan::ac {

struct PatternFile {
  PatternSet patterns;
  // 1-based source line of each pattern, parallel to patterns.
  std::vector<std::size_t> lines;
};

// One pattern per line; blank lines and lines starting with '#' are skipped,
// surrounding whitespace (including '\r') is trimmed.
PatternFile parse_patterns(std::string_view text);
PatternFile read_pattern_file(const std::filesystem::path& path);

void write_patterns(std::ostream& out, const PatternSet& patterns);

}  // namespace pepscan::ac
