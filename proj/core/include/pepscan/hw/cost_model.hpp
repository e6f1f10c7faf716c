#pragma once

#include <cstddef>

#include "pepscan/ac/match.hpp"

namespace pepscan::hw {

enum class Engine { kHardware, kSoftware };

// Per-character time constants (microseconds) for the co-design and the
// software-only matcher on the 50 MHz soft core.
struct CostModel {
  // Mean of (co-design matching time / residue count) over the 12 published
  // protein-set x peptide-set cells.
  static constexpr double kDefaultHwUsPerChar = 1.1161168709086;
  // Relative least-squares fit of the published software-only timings
  // against edge comparisons of the nested-prefix stress workload.
  static constexpr double kDefaultSwUsBasePerChar = 4.7343215112854;
  static constexpr double kDefaultSwUsPerEdgeScan = 0.2879368582474;

  double hw_us_per_char = kDefaultHwUsPerChar;
  double sw_us_base_per_char = kDefaultSwUsBasePerChar;
  double sw_us_per_edge_scan = kDefaultSwUsPerEdgeScan;

  // Throws kInvalidArgument unless every constant is finite and > 0.
  void validate() const;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

// hardware: text_len * hw_us_per_char, independent of the automaton.
// software: text_len * sw_us_base_per_char + edge_comparisons * sw_us_per_edge_scan;
// throws kMissingWorkProfile when `work` is null.
double estimate_time(const CostModel& model, Engine engine, std::size_t text_len,
                     const ac::WorkProfile* work = nullptr);

}  // namespace pepscan::hw
