#include "pepscan/bio/fasta.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pepscan/error.hpp"

namespace pepscan::bio {

std::vector<FastaRecord> parse_fasta(std::string_view text) {
  std::vector<FastaRecord> records;
  std::size_t line_no = 0;
  auto finish = [&] {
    if (!records.empty() && records.back().sequence.empty()) {
      throw Error(ErrorCode::kEmptySequence, "record " + records.back().id + " has no residues",
                  records.size() - 1);
    }
  };

  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '>') {
      finish();
      auto header = line.substr(1);
      auto split = header.find_first_of(" \t");
      FastaRecord rec;
      rec.id = std::string(header.substr(0, split));
      if (split != std::string_view::npos) {
        auto rest = header.substr(split);
        auto first = rest.find_first_not_of(" \t");
        if (first != std::string_view::npos) rec.description = std::string(rest.substr(first));
      }
      records.push_back(std::move(rec));
      continue;
    }
    if (!line.empty() && line.front() == ';') continue;

    for (char ch : line) {
      auto c = static_cast<unsigned char>(ch);
      if (std::isspace(c)) continue;
      if (records.empty()) {
        throw Error(ErrorCode::kNoRecords,
                    "sequence data before any '>' header at line " + std::to_string(line_no),
                    line_no);
      }
      if (!std::isalpha(c)) {
        throw Error(ErrorCode::kInvalidResidue,
                    "record " + records.back().id + " line " + std::to_string(line_no) +
                        " holds " + describe_byte(c),
                    line_no);
      }
      records.back().sequence.push_back(static_cast<char>(std::toupper(c)));
    }
  }
  finish();
  if (records.empty()) throw Error(ErrorCode::kNoRecords, "no '>' records found");
  return records;
}

std::vector<FastaRecord> read_fasta(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open FASTA file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fasta(buf.str());
}

void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records) {
  constexpr std::size_t kLineWidth = 60;
  for (const auto& r : records) {
    out << '>' << r.id;
    if (!r.description.empty()) out << ' ' << r.description;
    out << '\n';
    for (std::size_t i = 0; i < r.sequence.size(); i += kLineWidth) {
      out << std::string_view(r.sequence).substr(i, kLineWidth) << '\n';
    }
  }
}

}  // namespace pepscan::bio
