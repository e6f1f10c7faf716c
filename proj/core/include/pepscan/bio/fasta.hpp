#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pepscan::bio {

struct FastaRecord {
  std::string id;
  std::string description;
  // Uppercase residues, whitespace removed.
  std::string sequence;

  friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

// '>' lines open records (id = first token, description = the rest); ';'
// lines are comments. Sequence lines are case-folded and stripped of
// whitespace. Throws kNoRecords (also for sequence data before any header),
// kInvalidResidue, kEmptySequence.
std::vector<FastaRecord> parse_fasta(std::string_view text);
std::vector<FastaRecord> read_fasta(const std::filesystem::path& path);

// 60 residues per line.
void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records);

}  // namespace pepscan::bio
