#include "pepscan/bench/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pepscan/error.hpp"

namespace pepscan::bench {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(kSpace) - first + 1);
}

std::uint64_t parse_number(std::string_view s, std::size_t line) {
  s = trim(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "config line " + std::to_string(line) + ": \"" + std::string(s) +
                    "\" is not a non-negative integer",
                line);
  }
  return value;
}

std::vector<std::size_t> parse_list(std::string_view s, std::size_t line) {
  std::vector<std::size_t> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_number(s.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

void check_sizes(const std::vector<std::size_t>& sizes, const char* what) {
  if (sizes.empty()) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is empty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || (i && sizes[i] <= sizes[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " must be positive and strictly increasing");
    }
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void BenchConfig::validate() const {
  check_sizes(protein_set_sizes, "protein_sets");
  check_sizes(peptide_set_sizes, "peptide_sets");
  if (repetitions == 0) throw Error(ErrorCode::kInvalidArgument, "repetitions must be >= 1");
}

std::string BenchConfig::to_text() const {
  return "protein_sets=" + join(protein_set_sizes) + "\npeptide_sets=" + join(peptide_set_sizes) +
         "\nrepetitions=" + std::to_string(repetitions) + "\nseed=" + std::to_string(seed) + "\n";
}

BenchConfig parse_bench_config(std::string_view text) {
  BenchConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "config line " + std::to_string(line_no) + ": expected key=value", line_no);
    }
    auto key = trim(line.substr(0, eq));
    auto value = line.substr(eq + 1);
    if (key == "protein_sets") {
      config.protein_set_sizes = parse_list(value, line_no);
    } else if (key == "peptide_sets") {
      config.peptide_set_sizes = parse_list(value, line_no);
    } else if (key == "repetitions") {
      config.repetitions = parse_number(value, line_no);
    } else if (key == "seed") {
      config.seed = parse_number(value, line_no);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "config line " + std::to_string(line_no) + ": unknown key \"" +
                      std::string(key) + "\"",
                  line_no);
    }
  }
  config.validate();
  return config;
}

BenchConfig read_bench_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bench_config(buf.str());
}

}  // namespace pepscan::bench
