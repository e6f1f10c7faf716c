#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"

namespace pepscan::ac {

// A pattern occurrence, identified by the offset of its last byte.
struct MatchEvent {
  PatternId pattern_id = 0;
  std::size_t end_offset = 0;

  // (end_offset, pattern_id) ascending.
  friend auto operator<=>(const MatchEvent& a, const MatchEvent& b) {
    if (auto c = a.end_offset <=> b.end_offset; c != 0) return c;
    return a.pattern_id <=> b.pattern_id;
  }
  friend bool operator==(const MatchEvent&, const MatchEvent&) = default;
};

// Work counters. The sparse engine fills edge_comparisons and
// failure_traversals; the dense engine fills lookups.
struct WorkProfile {
  std::uint64_t edge_comparisons = 0;
  std::uint64_t failure_traversals = 0;
  std::uint64_t lookups = 0;

  WorkProfile& operator+=(const WorkProfile& other) noexcept {
    edge_comparisons += other.edge_comparisons;
    failure_traversals += other.failure_traversals;
    lookups += other.lookups;
    return *this;
  }
  friend bool operator==(const WorkProfile&, const WorkProfile&) = default;
};

struct MatchResult {
  std::vector<MatchEvent> events;
  WorkProfile work;
};

// Goto/failure walk over the edge arrays. Throws kInvalidSymbol
// (position = text offset) on bytes outside the alphabet and sentinel.
MatchResult match_sparse(const Automaton& automaton, std::string_view text);

// One table lookup per byte. Requires compile_dense.
MatchResult match_dense(const Automaton& automaton, std::string_view text);

// Brute force over every (pattern, offset) pair. Test oracle.
std::vector<MatchEvent> match_naive(const PatternSet& patterns, std::string_view text,
                                    const Alphabet& alphabet = Alphabet{});

}  // namespace pepscan::ac
