#include "pepscan/bench/workload.hpp"

#include <algorithm>
#include <random>

#include "pepscan/ac/alphabet.hpp"
#include "pepscan/error.hpp"

namespace pepscan::bench {
namespace {

constexpr char kAnchor = 'M';

}  // namespace

NestedPrefixFamily::NestedPrefixFamily(std::size_t max_patterns, std::uint64_t seed)
    : max_patterns_(max_patterns) {
  const std::size_t depth = (max_patterns + kBranchesPerNode - 1) / kBranchesPerNode;
  const std::size_t period = std::max(kMinPeriod, depth + 16);

  std::string others;
  for (char c : ac::Alphabet::kUppercase) {
    if (c != kAnchor) others.push_back(c);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = others.size() - 1; i > 0; --i) {
    std::swap(others[i], others[static_cast<std::size_t>(rng() % (i + 1))]);
  }

  trunk_.push_back(kAnchor);
  for (std::size_t i = 1; i < period; ++i) trunk_.push_back(others[(i - 1) % others.size()]);
}

ac::PatternSet NestedPrefixFamily::patterns(std::size_t count) const {
  if (count > max_patterns_) {
    throw Error(ErrorCode::kInvalidArgument, "family was sized for " +
                                                 std::to_string(max_patterns_) + " patterns, " +
                                                 std::to_string(count) + " requested");
  }
  ac::PatternSet set;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t depth = i / kBranchesPerNode + 1;
    std::size_t j = i % kBranchesPerNode;
    const char continuation = trunk_[depth];
    char branch = 0;
    for (char c : ac::Alphabet::kUppercase) {
      if (c == continuation) continue;
      if (j-- == 0) {
        branch = c;
        break;
      }
    }
    set.add(trunk_.substr(0, depth) + branch);
  }
  return set;
}

std::string NestedPrefixFamily::text(std::size_t length) const {
  std::string out;
  out.reserve(length);
  while (out.size() < length) {
    out.append(trunk_, 0, std::min(trunk_.size(), length - out.size()));
  }
  return out;
}

}  // namespace pepscan::bench
