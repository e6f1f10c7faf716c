#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"

namespace pepscan::hdl {

// Machine-readable twin of the generated VHDL. JSON form:
//   {"alphabet": "A..Z", "delta": [[...], ...], "outputs": [[...], ...],
//    "pattern_count": n, "patterns": [...], "sentinel": "#", "state_count": n}
// Keys sorted, delta row-major (state x column, sentinel column last).
struct TableArtifact {
  std::string alphabet;
  char sentinel = '#';
  std::size_t state_count = 0;
  std::size_t pattern_count = 0;
  std::vector<std::vector<ac::StateId>> delta;
  std::vector<std::vector<ac::PatternId>> outputs;
  std::vector<std::string> patterns;

  friend bool operator==(const TableArtifact&, const TableArtifact&) = default;
};

TableArtifact generate_table(const ac::Automaton& automaton);

// Canonical, byte-stable serialization.
std::string to_json(const TableArtifact& artifact);
// Throws kSchemaError with the offending JSON path.
TableArtifact parse_table(std::string_view json);

// Rebuilds the automaton from the artifact's patterns and checks that the
// stored delta and outputs agree with it. Throws kInconsistentTable on any
// out-of-range entry or disagreement.
ac::Automaton load_table(const TableArtifact& artifact);
ac::Automaton load_table(std::string_view json);

}  // namespace pepscan::hdl
