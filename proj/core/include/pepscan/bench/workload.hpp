#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "pepscan/ac/automaton.hpp"

namespace pepscan::bench {

// Nested-prefix stress family over a fixed trunk string T whose first letter
// occurs nowhere else in T. Pattern k*25 + j is T[0..k] followed by the j-th
// letter of A-Z other than T[k+1], so every trunk node at depth 1..m carries
// 25 leaf edges, inserted before the trunk continuation. The stress text
// repeats T; walking it visits each populated trunk node once per period, so
// the edge scan per character grows with the family size while the dense
// engine still does one lookup per character.
class NestedPrefixFamily {
 public:
  static constexpr std::size_t kBranchesPerNode = 25;
  static constexpr std::size_t kMinPeriod = 64;

  // Trunk long enough for families of up to `max_patterns` patterns. The seed
  // only permutes trunk letters; edge-scan counts do not depend on it.
  explicit NestedPrefixFamily(std::size_t max_patterns = 1200, std::uint64_t seed = 42);

  const std::string& trunk() const noexcept { return trunk_; }
  std::size_t max_patterns() const noexcept { return max_patterns_; }

  // The first `count` patterns; count <= max_patterns().
  ac::PatternSet patterns(std::size_t count) const;
  // T repeated and cut to `length` bytes.
  std::string text(std::size_t length) const;

 private:
  std::size_t max_patterns_;
  std::string trunk_;
};

}  // namespace pepscan::bench
