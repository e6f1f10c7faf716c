#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pepscan/bench/calibrate.hpp"
#include "pepscan/bench/config.hpp"
#include "pepscan/bench/matrix.hpp"
#include "pepscan/bench/paper_reference.hpp"

namespace pepscan::bench {

inline constexpr std::string_view kReportCsvHeader =
    "proteins,peptides,sw_us,hw_us,speedup,paper_sw_us,paper_hw_us,paper_speedup,rel_err";

// Deterministic artifacts (no wall-clock values):
//   csv       report.csv, rel_err is the speedup error against the reference
//   markdown  tables.md, hardware / software / speedup tables with reference
//             values and relative error, plus the calibration residuals
//   fig4      fig4.dat, "text_length sw_us hw_us" for the largest peptide set
struct BenchReport {
  std::string csv;
  std::string markdown;
  std::string fig4;
};

BenchReport emit_report(const std::vector<BenchCell>& cells, const PaperReference& paper,
                        const CalibrationReport* calibration = nullptr);

// Host timings; not reproducible run to run, so kept out of BenchReport.
std::string wallclock_csv(const std::vector<BenchCell>& cells);

struct BenchOutcome {
  CalibrationReport calibration;
  std::vector<BenchCell> cells;
  BenchReport report;
};

// calibrate -> run_matrix -> emit_report.
BenchOutcome run_bench(const BenchConfig& config);

// Writes report.csv, tables.md, fig4.dat and wallclock.csv into `dir`.
void write_bench_outputs(const BenchOutcome& outcome, const std::filesystem::path& dir);

}  // namespace pepscan::bench
