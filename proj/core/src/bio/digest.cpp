#include "pepscan/bio/digest.hpp"

#include <unordered_set>

#include "pepscan/error.hpp"

namespace pepscan::bio {

void DigestParams::validate() const {
  if (enzyme != "trypsin") {
    throw Error(ErrorCode::kUnsupportedEnzyme, "enzyme \"" + enzyme + "\" is not supported");
  }
  if (missed_cleavages < 0 || missed_cleavages > 3) {
    throw Error(ErrorCode::kInvalidArgument, "missed cleavages must be in 0..3");
  }
  if (max_len && min_len > *max_len) {
    throw Error(ErrorCode::kInvalidArgument, "min_len exceeds max_len");
  }
}

std::vector<Peptide> digest(std::string_view sequence, const DigestParams& params) {
  params.validate();

  // Fragment start offsets; fragment i spans [cuts[i], cuts[i + 1]).
  std::vector<std::size_t> cuts{0};
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const char c = sequence[i];
    if ((c == 'K' || c == 'R') && sequence[i + 1] != 'P') cuts.push_back(i + 1);
  }
  const std::size_t fragments = sequence.empty() ? 0 : cuts.size();
  cuts.push_back(sequence.size());

  std::vector<Peptide> out;
  std::unordered_set<std::string_view> seen;
  for (int missed = 0; missed <= params.missed_cleavages; ++missed) {
    const auto span = static_cast<std::size_t>(missed) + 1;
    for (std::size_t first = 0; first + span <= fragments; ++first) {
      const std::size_t begin = cuts[first];
      const std::size_t len = cuts[first + span] - begin;
      if (len < params.min_len || (params.max_len && len > *params.max_len)) continue;
      auto piece = sequence.substr(begin, len);
      if (params.dedupe && !seen.insert(piece).second) continue;
      out.push_back({std::string(piece), begin, missed});
    }
  }
  return out;
}

std::vector<std::string> digest_sequences(std::string_view sequence, const DigestParams& params) {
  std::vector<std::string> out;
  for (auto& p : digest(sequence, params)) out.push_back(std::move(p.sequence));
  return out;
}

}  // namespace pepscan::bio
