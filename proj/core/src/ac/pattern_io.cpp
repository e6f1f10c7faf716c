#include "pepscan/ac/pattern_io.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pepscan/error.hpp"

namespace pepscan::ac {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

}  // namespace

PatternFile parse_patterns(std::string_view text) {
  PatternFile file;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::string pattern(line);
    // Fold case the same way FASTA residues are folded.
    for (auto& c : pattern) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    file.patterns.add(std::move(pattern));
    file.lines.push_back(line_no);
  }
  return file;
}

PatternFile read_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open pattern file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_patterns(buf.str());
}

void write_patterns(std::ostream& out, const PatternSet& patterns) {
  for (const auto& p : patterns.patterns()) out << p << '\n';
}

}  // namespace pepscan::ac
