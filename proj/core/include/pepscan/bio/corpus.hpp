#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pepscan/ac/alphabet.hpp"
#include "pepscan/ac/automaton.hpp"
#include "pepscan/bio/digest.hpp"
#include "pepscan/bio/fasta.hpp"

namespace pepscan::bio {

// Half-open [begin, end) span of one record inside the scan text.
struct RecordSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Location {
  std::size_t record = 0;
  std::size_t offset = 0;
};

// Proteins concatenated into one scan text with a sentinel between records.
class ProteinCorpus {
 public:
  const std::vector<FastaRecord>& records() const noexcept { return records_; }
  const std::string& scan_text() const noexcept { return scan_text_; }
  const std::vector<RecordSpan>& boundaries() const noexcept { return spans_; }
  char sentinel() const noexcept { return sentinel_; }

  // Maps a scan-text offset to (record index, offset within the record).
  // Throws kInvalidArgument for sentinel positions or offsets past the end.
  Location locate(std::size_t scan_offset) const;

 private:
  friend ProteinCorpus build_corpus(std::vector<FastaRecord>, char);

  std::vector<FastaRecord> records_;
  std::string scan_text_;
  std::vector<RecordSpan> spans_;
  char sentinel_ = '#';
};

// Throws kEmptyCorpus, kSentinelInAlphabet (sentinel in A-Z).
ProteinCorpus build_corpus(std::vector<FastaRecord> records,
                           char sentinel = static_cast<char>(ac::Alphabet::kDefaultSentinel));

struct CorpusStats {
  std::size_t record_count = 0;
  // Sentinels excluded.
  std::size_t residue_count = 0;
  std::vector<std::size_t> record_lengths;

  std::string to_json() const;
  std::string to_text() const;
};

CorpusStats corpus_stats(const ProteinCorpus& corpus);

// `record_count` random proteins totalling exactly `total_length` residues,
// drawn over the 20 standard amino acids with UniProt background
// frequencies. Deterministic for a seed on every platform.
std::vector<FastaRecord> synthesize_corpus(std::size_t record_count, std::size_t total_length,
                                           std::uint64_t seed);

// Digests every record and returns the first `limit` peptides (all when
// limit is 0) as a pattern set, in record order.
ac::PatternSet peptide_patterns(const std::vector<FastaRecord>& records,
                                const DigestParams& params, std::size_t limit = 0);

}  // namespace pepscan::bio
