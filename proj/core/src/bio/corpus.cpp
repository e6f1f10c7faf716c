#include "pepscan/bio/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "pepscan/error.hpp"

namespace pepscan::bio {
namespace {

// UniProtKB/Swiss-Prot background composition, in units of 0.01%.
constexpr std::string_view kResidues = "ACDEFGHIKLMNPQRSTVWY";
constexpr std::array<std::uint32_t, 20> kWeights = {825, 137, 545, 675, 386, 707, 227,
                                                    596, 584, 966, 242, 406, 470, 393,
                                                    553, 656, 534, 687, 108, 292};

}  // namespace

Location ProteinCorpus::locate(std::size_t scan_offset) const {
  auto it = std::upper_bound(spans_.begin(), spans_.end(), scan_offset,
                             [](std::size_t off, const RecordSpan& s) { return off < s.end; });
  if (it == spans_.end() || scan_offset < it->begin) {
    throw Error(ErrorCode::kInvalidArgument,
                "offset " + std::to_string(scan_offset) + " is not inside a record", scan_offset);
  }
  return {static_cast<std::size_t>(it - spans_.begin()), scan_offset - it->begin};
}

ProteinCorpus build_corpus(std::vector<FastaRecord> records, char sentinel) {
  if (records.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus needs at least one record");
  if (sentinel >= 'A' && sentinel <= 'Z') {
    throw Error(ErrorCode::kSentinelInAlphabet,
                "sentinel " + describe_byte(static_cast<unsigned char>(sentinel)) +
                    " is a residue letter");
  }
  ProteinCorpus corpus;
  corpus.sentinel_ = sentinel;
  std::size_t total = records.size() - 1;
  for (const auto& r : records) total += r.sequence.size();
  corpus.scan_text_.reserve(total);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) corpus.scan_text_.push_back(sentinel);
    const std::size_t begin = corpus.scan_text_.size();
    corpus.scan_text_ += records[i].sequence;
    corpus.spans_.push_back({begin, corpus.scan_text_.size()});
  }
  corpus.records_ = std::move(records);
  return corpus;
}

CorpusStats corpus_stats(const ProteinCorpus& corpus) {
  CorpusStats stats;
  stats.record_count = corpus.records().size();
  for (const auto& r : corpus.records()) {
    stats.record_lengths.push_back(r.sequence.size());
    stats.residue_count += r.sequence.size();
  }
  return stats;
}

std::string CorpusStats::to_json() const {
  nlohmann::ordered_json doc;
  doc["record_count"] = record_count;
  doc["residue_count"] = residue_count;
  doc["record_lengths"] = record_lengths;
  return doc.dump(2) + "\n";
}

std::string CorpusStats::to_text() const {
  std::ostringstream out;
  char line[96];
  std::snprintf(line, sizeof line, "%-16s %12zu\n", "records", record_count);
  out << line;
  std::snprintf(line, sizeof line, "%-16s %12zu\n", "residues", residue_count);
  out << line;
  if (!record_lengths.empty()) {
    auto [lo, hi] = std::minmax_element(record_lengths.begin(), record_lengths.end());
    std::snprintf(line, sizeof line, "%-16s %12zu\n", "shortest", *lo);
    out << line;
    std::snprintf(line, sizeof line, "%-16s %12zu\n", "longest", *hi);
    out << line;
    std::snprintf(line, sizeof line, "%-16s %12.1f\n", "mean length",
                  static_cast<double>(residue_count) / static_cast<double>(record_count));
    out << line;
  }
  return out.str();
}

std::vector<FastaRecord> synthesize_corpus(std::size_t record_count, std::size_t total_length,
                                           std::uint64_t seed) {
  if (record_count == 0 || total_length < record_count) {
    throw Error(ErrorCode::kInvalidArgument,
                "need at least one residue per record (records=" + std::to_string(record_count) +
                    ", total=" + std::to_string(total_length) + ")");
  }
  // Raw engine output only: std distributions are not portable bit-for-bit.
  std::mt19937_64 rng(seed);

  std::vector<std::uint64_t> weights(record_count);
  std::uint64_t weight_sum = 0;
  for (auto& w : weights) {
    w = 500 + rng() % 1001;
    weight_sum += w;
  }
  const std::size_t spare = total_length - record_count;
  std::vector<std::size_t> lengths(record_count, 1);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < record_count; ++i) {
    auto extra = static_cast<std::size_t>(spare * weights[i] / weight_sum);
    lengths[i] += extra;
    assigned += extra;
  }
  for (std::size_t i = 0; assigned < spare; i = (i + 1) % record_count, ++assigned) ++lengths[i];

  std::uint32_t cumulative[20];
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < kWeights.size(); ++i) cumulative[i] = acc += kWeights[i];

  std::vector<FastaRecord> records(record_count);
  for (std::size_t r = 0; r < record_count; ++r) {
    char id[32];
    std::snprintf(id, sizeof id, "SYN%05zu", r + 1);
    records[r].id = id;
    records[r].description = "synthetic protein length=" + std::to_string(lengths[r]);
    auto& seq = records[r].sequence;
    seq.resize(lengths[r]);
    for (auto& c : seq) {
      const auto x = static_cast<std::uint32_t>(rng() % acc);
      std::size_t k = 0;
      while (cumulative[k] <= x) ++k;
      c = kResidues[k];
    }
  }
  return records;
}

ac::PatternSet peptide_patterns(const std::vector<FastaRecord>& records,
                                const DigestParams& params, std::size_t limit) {
  ac::PatternSet set;
  std::unordered_set<std::string> seen;
  for (const auto& r : records) {
    for (auto& p : digest(r.sequence, params)) {
      if (limit && set.size() >= limit) return set;
      if (params.dedupe && !seen.insert(p.sequence).second) continue;
      set.add(std::move(p.sequence));
    }
  }
  return set;
}

}  // namespace pepscan::bio
