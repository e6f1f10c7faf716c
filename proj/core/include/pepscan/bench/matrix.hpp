#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pepscan/ac/match.hpp"
#include "pepscan/bench/config.hpp"
#include "pepscan/hw/cost_model.hpp"

namespace pepscan::bench {

struct BenchCell {
  std::size_t proteins = 0;
  std::size_t peptides = 0;
  std::size_t text_length = 0;
  std::size_t state_count = 0;
  std::size_t event_count = 0;

  // Host wall clock, median over repetitions. Engine-relative evidence only.
  double measured_sw_us = 0;
  double measured_dense_us = 0;

  double modeled_sw_us = 0;
  double modeled_hw_us = 0;
  // modeled_sw_us / modeled_hw_us
  double speedup = 0;

  ac::WorkProfile sparse_work;
  std::uint64_t dense_lookups = 0;
  std::uint64_t hw_cycles = 0;
};

// Edge-scan counts of the stress workload for every (protein set, peptide
// set) pair of the config; deterministic, no timing.
struct EdgeScanSample {
  std::size_t proteins = 0;
  std::size_t peptides = 0;
  std::size_t text_length = 0;
  std::uint64_t edge_comparisons = 0;
};
std::vector<EdgeScanSample> profile_workload(const BenchConfig& config);

// Runs every cell: sparse engine (timed, with work profile), dense engine
// (timed) and the component simulator (cycles and modeled time). Throws
// kInvalidArgument if the engines disagree on any cell.
std::vector<BenchCell> run_matrix(const BenchConfig& config, const hw::CostModel& model);

}  // namespace pepscan::bench
