#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "error_code.hpp"
#include "pepscan/ac/match.hpp"
#include "pepscan/bench/calibrate.hpp"
#include "pepscan/bench/config.hpp"
#include "pepscan/bench/matrix.hpp"
#include "pepscan/bench/paper_reference.hpp"
#include "pepscan/bench/report.hpp"
#include "pepscan/bench/workload.hpp"

using namespace pepscan;
using namespace pepscan::bench;
using pepscan::testkit::code_of;

TEST(Reference, Lookup) {
  const auto& p = paper_reference();
  EXPECT_EQ(p.row_of(500), 1u);
  EXPECT_EQ(p.col_of(1200), 3u);
  EXPECT_FALSE(p.row_of(42));
  EXPECT_EQ(residues_for(1000), 329527u);
  EXPECT_EQ(residues_for(7), 7 * kResiduesPerProtein);
  // Published speedups are sw/hw rounded to two places.
  for (std::size_t r = 0; r < p.kRows; ++r) {
    for (std::size_t c = 0; c < p.kCols; ++c) {
      EXPECT_NEAR(p.sw_us[r][c] / p.hw_us[r][c], p.speedup[r][c], 0.006);
    }
  }
}

TEST(Workload, TrunkShape) {
  NestedPrefixFamily f(1200, 42);
  const auto& t = f.trunk();
  EXPECT_EQ(t.size(), 64u);
  EXPECT_EQ(t[0], 'M');
  EXPECT_EQ(t.find('M', 1), std::string::npos);
  std::set<char> first26(t.begin(), t.begin() + 26);
  EXPECT_EQ(first26.size(), 26u);
  EXPECT_EQ(NestedPrefixFamily(5000, 1).trunk().size(), 200u + 16u);
}

TEST(Workload, PatternsAreDistinctAndNeverOccurInText) {
  NestedPrefixFamily f(1200, 7);
  auto set = f.patterns(1200);
  std::set<std::string> unique(set.patterns().begin(), set.patterns().end());
  EXPECT_EQ(unique.size(), 1200u);
  auto text = f.text(10000);
  EXPECT_EQ(text.size(), 10000u);
  EXPECT_TRUE(ac::match_sparse(ac::build_automaton(set), text).events.empty());
  EXPECT_EQ(code_of([&] { f.patterns(1201); }), ErrorCode::kInvalidArgument);
}

// Edge work depends on the family size but not on the letter shuffle.
TEST(Workload, EdgeWorkIsSeedIndependent) {
  for (std::size_t m : {100u, 500u, 1000u, 1200u}) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      NestedPrefixFamily f(1200, seed);
      auto a = ac::build_automaton(f.patterns(m));
      seen.insert(ac::match_sparse(a, f.text(6400)).work.edge_comparisons);
    }
    EXPECT_EQ(seen.size(), 1u) << m;
  }
}

TEST(Config, ParseAndValidate) {
  auto cfg = parse_bench_config(
      "# matrix\nprotein_sets = 100, 500\npeptide_sets=1200\nrepetitions=2\nseed=7\n");
  EXPECT_EQ(cfg.protein_set_sizes, (std::vector<std::size_t>{100, 500}));
  EXPECT_EQ(cfg.peptide_set_sizes, (std::vector<std::size_t>{1200}));
  EXPECT_EQ(cfg.repetitions, 2u);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(parse_bench_config(cfg.to_text()).protein_set_sizes, cfg.protein_set_sizes);
}

TEST(Config, Errors) {
  EXPECT_EQ(code_of([] { parse_bench_config("colour=blue\n"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_bench_config("repetitions=0\n"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_bench_config("protein_sets=\n"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_bench_config("peptide_sets=10,x\n"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { read_bench_config("/nonexistent.cfg"); }), ErrorCode::kIo);
}

// The frozen defaults are what the calibration produces.
TEST(Calibrate, DefaultsAreReproducible) {
  auto report = calibrate();
  hw::CostModel defaults;
  EXPECT_NEAR(report.model.hw_us_per_char, defaults.hw_us_per_char, 1e-9);
  EXPECT_NEAR(report.model.sw_us_base_per_char, defaults.sw_us_base_per_char, 1e-9);
  EXPECT_NEAR(report.model.sw_us_per_edge_scan, defaults.sw_us_per_edge_scan, 1e-9);
  EXPECT_EQ(report.hw_residuals.size(), 12u);
  EXPECT_EQ(report.sw_residuals.size(), 12u);
  EXPECT_NE(report.to_text().find("sw_us_per_edge_scan"), std::string::npos);
}

// An exactly linear synthetic target must be recovered.
TEST(Calibrate, RecoversExactModel) {
  PaperReference p = paper_reference();
  std::vector<EdgeScanSample> samples;
  const double hw = 1.5, base = 4.0, edge = 0.25;
  for (std::size_t r = 0; r < p.kRows; ++r) {
    for (std::size_t c = 0; c < p.kCols; ++c) {
      const auto len = p.residues[r];
      const std::uint64_t edges = len * (2 + 3 * c + r);
      samples.push_back({p.protein_sets[r], p.peptide_sets[c], len, edges});
      p.hw_us[r][c] = hw * static_cast<double>(len);
      p.sw_us[r][c] = base * static_cast<double>(len) + edge * static_cast<double>(edges);
    }
  }
  auto report = calibrate(p, samples);
  EXPECT_NEAR(report.model.hw_us_per_char, hw, 1e-9);
  EXPECT_NEAR(report.model.sw_us_base_per_char, base, 1e-9);
  EXPECT_NEAR(report.model.sw_us_per_edge_scan, edge, 1e-9);
  EXPECT_LT(report.sw_max_abs_rel_err, 1e-9);
}

TEST(Calibrate, DegenerateFitThrows) {
  PaperReference p = paper_reference();
  std::vector<EdgeScanSample> samples;
  for (std::size_t r = 0; r < p.kRows; ++r) {
    for (std::size_t c = 0; c < p.kCols; ++c) {
      samples.push_back({p.protein_sets[r], p.peptide_sets[c], p.residues[r], p.residues[r] * 4});
    }
  }
  EXPECT_EQ(code_of([&] { calibrate(p, samples); }), ErrorCode::kSingularFit);
}

TEST(Matrix, DegenerateSingleCell) {
  BenchConfig cfg;
  cfg.protein_set_sizes = {1};
  cfg.peptide_set_sizes = {1};
  cfg.repetitions = 1;
  auto cells = run_matrix(cfg, hw::CostModel{});
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].text_length, kResiduesPerProtein);
  EXPECT_EQ(cells[0].dense_lookups, kResiduesPerProtein);
  EXPECT_EQ(cells[0].hw_cycles, kResiduesPerProtein);
}

TEST(Matrix, ModelFieldsAreConsistent) {
  BenchConfig cfg;
  cfg.protein_set_sizes = {100};
  cfg.peptide_set_sizes = {100, 1200};
  cfg.repetitions = 1;
  hw::CostModel model;
  auto cells = run_matrix(cfg, model);
  ASSERT_EQ(cells.size(), 2u);
  for (const auto& c : cells) {
    EXPECT_DOUBLE_EQ(c.modeled_hw_us,
                     hw::estimate_time(model, hw::Engine::kHardware, c.text_length));
    EXPECT_DOUBLE_EQ(c.modeled_sw_us, hw::estimate_time(model, hw::Engine::kSoftware,
                                                        c.text_length, &c.sparse_work));
    EXPECT_DOUBLE_EQ(c.speedup, c.modeled_sw_us / c.modeled_hw_us);
  }
  EXPECT_GT(cells[1].sparse_work.edge_comparisons, cells[0].sparse_work.edge_comparisons);
}

TEST(Report, CsvLayout) {
  BenchConfig cfg;
  cfg.repetitions = 1;
  auto outcome = run_bench(cfg);
  const auto& csv = outcome.report.csv;
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kReportCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
  EXPECT_NE(outcome.report.markdown.find("Calibration"), std::string::npos);
  EXPECT_EQ(outcome.report.fig4.rfind("# text_length", 0), 0u);
  auto wall = wallclock_csv(outcome.cells);
  EXPECT_EQ(std::count(wall.begin(), wall.end(), '\n'), 13);
}
