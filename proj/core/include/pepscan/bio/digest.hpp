#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"

namespace pepscan::bio {

struct DigestParams {
  std::string enzyme = "trypsin";
  // 0..3
  int missed_cleavages = 0;
  std::size_t min_len = 1;
  std::optional<std::size_t> max_len;
  bool dedupe = false;

  // Throws kUnsupportedEnzyme or kInvalidArgument.
  void validate() const;
};

struct Peptide {
  std::string sequence;
  std::size_t start = 0;
  int missed_cleavages = 0;

  friend bool operator==(const Peptide&, const Peptide&) = default;
};

// Trypsin: cleave after K or R unless the next residue is P. Fully cleaved
// fragments come first in positional order, then the one-missed-cleavage
// joins, and so on up to params.missed_cleavages. Length filters apply after
// joining; dedupe keeps the first occurrence of each sequence.
std::vector<Peptide> digest(std::string_view sequence, const DigestParams& params = {});

// Sequences only, in digest order.
std::vector<std::string> digest_sequences(std::string_view sequence,
                                          const DigestParams& params = {});

}  // namespace pepscan::bio
