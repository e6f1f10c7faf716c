#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "error_code.hpp"
#include "oracles.hpp"
#include "pepscan/ac/automaton.hpp"
#include "pepscan/ac/match.hpp"
#include "pepscan/hw/component_sim.hpp"
#include "pepscan/hw/cost_model.hpp"

using namespace pepscan;
using namespace pepscan::hw;
using pepscan::testkit::code_of;

namespace {

ac::Automaton demo() { return ac::build_automaton(ac::PatternSet{"HE", "SHE", "HIS", "HERS"}); }

void feed(ComponentSim& sim, std::string_view text) {
  for (char c : text) sim.write_register(reg::kCharIn, static_cast<unsigned char>(c));
}

std::vector<ac::PatternId> drain(ComponentSim& sim) {
  std::vector<ac::PatternId> out;
  for (auto v = sim.read_register(reg::kMatchFifo); v != reg::kNoMatch;
       v = sim.read_register(reg::kMatchFifo)) {
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(CostModel, HardwareTimeIsLinearInLength) {
  CostModel m{2.0, 3.0, 0.5};
  EXPECT_DOUBLE_EQ(estimate_time(m, Engine::kHardware, 1000), 2000.0);
  EXPECT_DOUBLE_EQ(estimate_time(m, Engine::kHardware, 0), 0.0);
}

TEST(CostModel, SoftwareTimeAddsEdgeScans) {
  CostModel m{2.0, 3.0, 0.5};
  ac::WorkProfile w;
  w.edge_comparisons = 400;
  EXPECT_DOUBLE_EQ(estimate_time(m, Engine::kSoftware, 100, &w), 300.0 + 200.0);
  EXPECT_EQ(code_of([&] { estimate_time(m, Engine::kSoftware, 100); }),
            ErrorCode::kMissingWorkProfile);
}

TEST(CostModel, RejectsNonPositiveConstants) {
  EXPECT_NO_THROW(CostModel{}.validate());
  EXPECT_EQ(code_of([] { CostModel{0.0, 1.0, 1.0}.validate(); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { CostModel{1.0, -1.0, 1.0}.validate(); }), ErrorCode::kInvalidArgument);
}

TEST(ComponentSim, RequiresDenseTable) {
  auto a = ac::build_failure(ac::build_goto(ac::PatternSet{"AB"}));
  EXPECT_EQ(code_of([&] { ComponentSim sim(a); }), ErrorCode::kInvalidArgument);
}

TEST(ComponentSim, RegisterMap) {
  auto a = demo();
  ComponentSim sim(a);
  EXPECT_EQ(sim.read_register(reg::kStatus), reg::kStatusReady);
  EXPECT_EQ(sim.read_register(reg::kMatchFifo), reg::kNoMatch);
  EXPECT_EQ(code_of([&] { sim.write_register(reg::kMatchFifo, 0); }), ErrorCode::kWriteToReadOnly);
  EXPECT_EQ(code_of([&] { sim.write_register(reg::kStatus, 0); }), ErrorCode::kWriteToReadOnly);
  EXPECT_EQ(code_of([&] { sim.write_register(4, 0); }), ErrorCode::kInvalidAddress);
  EXPECT_EQ(code_of([&] { sim.read_register(reg::kControl); }), ErrorCode::kInvalidAddress);
  EXPECT_EQ(code_of([&] { sim.read_register(17); }), ErrorCode::kInvalidAddress);
  EXPECT_EQ(code_of([&] { sim.write_register(reg::kCharIn, 'h'); }), ErrorCode::kInvalidSymbol);
}

TEST(ComponentSim, UshersThroughRegisters) {
  auto a = demo();
  ComponentSim sim(a);
  feed(sim, "USHE");
  EXPECT_EQ(sim.read_register(reg::kResult), 2u);
  EXPECT_EQ(sim.read_register(reg::kStatus), reg::kStatusReady | reg::kStatusFifoNonEmpty);
  auto ids = drain(sim);
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(ids, (std::vector<ac::PatternId>{0, 1}));
  feed(sim, "RS");
  EXPECT_EQ(drain(sim), (std::vector<ac::PatternId>{3}));
  EXPECT_EQ(sim.cycles(), 6u);
  EXPECT_EQ(sim.position(), 6u);
  EXPECT_DOUBLE_EQ(sim.cycle_time_us(), 6.0 / 50.0);
}

TEST(ComponentSim, ControlResetClearsState) {
  auto a = demo();
  ComponentSim sim(a);
  feed(sim, "SHE");
  ASSERT_GT(sim.fifo_size(), 0u);
  sim.write_register(reg::kControl, reg::kControlReset);
  EXPECT_EQ(sim.state(), ac::kRoot);
  EXPECT_EQ(sim.fifo_size(), 0u);
  EXPECT_EQ(sim.read_register(reg::kResult), 0u);
  EXPECT_EQ(sim.read_register(reg::kStatus) & reg::kStatusFifoNonEmpty, 0u);
  EXPECT_EQ(sim.read_register(reg::kMatchFifo), reg::kNoMatch);
  // Position and cycle counters keep accumulating across resets.
  EXPECT_EQ(sim.cycles(), 3u);
  feed(sim, "S");
  sim.write_register(reg::kControl, 0);  // not a reset
  EXPECT_NE(sim.state(), ac::kRoot);
  EXPECT_EQ(sim.position(), 4u);
}

TEST(ComponentSim, SentinelReturnsToRoot) {
  auto a = demo();
  ComponentSim sim(a);
  feed(sim, "SH#E");
  EXPECT_EQ(sim.state(), ac::kRoot);
  EXPECT_EQ(sim.fifo_size(), 0u);
}

// Property: every id pushed is popped exactly once and equals the sum of
// output-set sizes over the visited states.
TEST(ComponentSimProperty, FifoConservation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto pats = testkit::random_patterns(rng, 1 + rng() % 30, 4, "ABC");
    auto a = ac::build_automaton(ac::PatternSet(pats));
    auto text = testkit::random_string(rng, 500, "ABC#");
    ComponentSim sim(a);
    std::size_t pushed = 0, popped = 0;
    for (char c : text) {
      sim.write_register(reg::kCharIn, static_cast<unsigned char>(c));
      pushed += a.dense().outputs(sim.state()).size();
      if (rng() % 3 == 0) popped += drain(sim).size();
    }
    popped += drain(sim).size();
    EXPECT_EQ(pushed, popped);
    EXPECT_EQ(popped, testkit::scan_oracle(pats, text).size());
  }
}

TEST(RunProteinList, MatchesDenseEngineAndModelsTime) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto pats = testkit::random_patterns(rng, 1 + rng() % 50, 6, "ACDEFGHIK");
    auto a = ac::build_automaton(ac::PatternSet(pats));
    auto text = testkit::random_string(rng, 1 + rng() % 2000, "ACDEFGHIK#");
    ComponentSim sim(a);
    CostModel model;
    auto run = run_protein_list(sim, text, model);
    EXPECT_EQ(run.events, ac::match_dense(a, text).events);
    EXPECT_EQ(run.cycles, text.size());
    EXPECT_DOUBLE_EQ(run.modeled_us, estimate_time(model, Engine::kHardware, text.size()));
  }
}

TEST(RunProteinList, ResetsBetweenRuns) {
  auto a = demo();
  ComponentSim sim(a);
  feed(sim, "SH");
  auto run = run_protein_list(sim, "ERS");
  EXPECT_TRUE(run.events.empty());
  EXPECT_EQ(run.cycles, 3u);
}

TEST(RunProteinList, TraceHasOneRowPerByte) {
  auto a = demo();
  ComponentSim sim(a);
  std::ostringstream trace;
  run_protein_list(sim, "USHERS", {}, &trace);
  std::istringstream in(trace.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kTraceHeader);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows.front().substr(0, 4), "0,U,");
  EXPECT_EQ(rows.back().substr(rows.back().rfind(',') + 1), "6");
}

TEST(RunProteinList, ErrorCarriesOffset) {
  auto a = demo();
  ComponentSim sim(a);
  try {
    run_protein_list(sim, "USH-RS");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSymbol);
    EXPECT_EQ(e.position().value_or(0), 3u);
  }
}
