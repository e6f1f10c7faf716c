// Reference implementations used by the tests. Each one is deliberately
// brute force and shares no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"
#include "pepscan/ac/match.hpp"

namespace pepscan::testkit {

// Distinct prefixes of the pattern set, including the empty prefix (root).
inline std::set<std::string> prefix_oracle(const std::vector<std::string>& patterns) {
  std::set<std::string> out{""};
  for (const auto& p : patterns) {
    for (std::size_t n = 1; n <= p.size(); ++n) out.insert(p.substr(0, n));
  }
  return out;
}

// Longest proper suffix of `s` that is a prefix of some pattern.
inline std::string suffix_oracle(const std::string& s, const std::set<std::string>& prefixes) {
  for (std::size_t drop = 1; drop <= s.size(); ++drop) {
    auto candidate = s.substr(drop);
    if (prefixes.count(candidate)) return candidate;
  }
  return "";
}

// Ids of every pattern that is a suffix of `s`.
inline std::vector<ac::PatternId> suffix_outputs(const std::string& s,
                                                 const std::vector<std::string>& patterns) {
  std::vector<ac::PatternId> out;
  for (ac::PatternId id = 0; id < patterns.size(); ++id) {
    const auto& p = patterns[id];
    if (p.size() <= s.size() && s.compare(s.size() - p.size(), p.size(), p) == 0) {
      out.push_back(id);
    }
  }
  return out;
}

// Every (pattern, end) pair where the pattern occurs; sorted.
inline std::vector<ac::MatchEvent> scan_oracle(const std::vector<std::string>& patterns,
                                               std::string_view text) {
  std::vector<ac::MatchEvent> out;
  for (ac::PatternId id = 0; id < patterns.size(); ++id) {
    const auto& p = patterns[id];
    if (p.empty() || p.size() > text.size()) continue;
    for (std::size_t start = 0; start + p.size() <= text.size(); ++start) {
      if (text.substr(start, p.size()) == p) out.push_back({id, start + p.size() - 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ac::MatchEvent> sorted(std::vector<ac::MatchEvent> events) {
  std::sort(events.begin(), events.end());
  return events;
}

inline std::string random_string(std::mt19937_64& rng, std::size_t len, std::string_view symbols) {
  std::string s(len, '\0');
  for (auto& c : s) c = symbols[rng() % symbols.size()];
  return s;
}

// Small alphabets make overlaps and shared prefixes common.
inline std::vector<std::string> random_patterns(std::mt19937_64& rng, std::size_t count,
                                                std::size_t max_len, std::string_view symbols) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_string(rng, 1 + rng() % max_len, symbols));
  }
  return out;
}

}  // namespace pepscan::testkit
