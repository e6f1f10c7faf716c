#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pepscan::bench {

struct BenchConfig {
  std::vector<std::size_t> protein_set_sizes{100, 500, 1000};
  std::vector<std::size_t> peptide_set_sizes{100, 500, 1000, 1200};
  // Wall-clock repetitions per cell, reduced by median.
  std::size_t repetitions = 5;
  std::uint64_t seed = 42;

  // Throws kInvalidArgument: sizes must be positive and strictly increasing.
  void validate() const;
  std::string to_text() const;
};

// key=value lines: protein_sets=100,500,1000  peptide_sets=...  repetitions=N
// seed=N. '#' starts a comment. Unknown keys are errors.
BenchConfig parse_bench_config(std::string_view text);
BenchConfig read_bench_config(const std::filesystem::path& path);

}  // namespace pepscan::bench
