// Sparse (edge-array) versus dense (table) matching on the nested-prefix
// stress family, plus automaton construction cost.

#include <benchmark/benchmark.h>

#include "pepscan/ac/automaton.hpp"
#include "pepscan/ac/match.hpp"
#include "pepscan/bench/workload.hpp"
#include "pepscan/bio/corpus.hpp"
#include "pepscan/hw/component_sim.hpp"

namespace {

using namespace pepscan;

constexpr std::size_t kTextLength = 1 << 20;

const bench::NestedPrefixFamily& family() {
  static const bench::NestedPrefixFamily f(1200, 42);
  return f;
}

const std::string& stress_text() {
  static const std::string text = family().text(kTextLength);
  return text;
}

void BM_MatchSparse(benchmark::State& state) {
  const auto a = ac::build_automaton(family().patterns(static_cast<std::size_t>(state.range(0))));
  const auto& text = stress_text();
  std::uint64_t edges = 0;
  for (auto _ : state) {
    auto r = ac::match_sparse(a, text);
    edges = r.work.edge_comparisons;
    benchmark::DoNotOptimize(r);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
  state.counters["edges_per_char"] = static_cast<double>(edges) / static_cast<double>(text.size());
}

void BM_MatchDense(benchmark::State& state) {
  const auto a = ac::build_automaton(family().patterns(static_cast<std::size_t>(state.range(0))));
  const auto& text = stress_text();
  for (auto _ : state) {
    auto r = ac::match_dense(a, text);
    benchmark::DoNotOptimize(r);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
  state.counters["states"] = static_cast<double>(a.state_count());
}

void BM_ComponentSim(benchmark::State& state) {
  const auto a = ac::build_automaton(family().patterns(static_cast<std::size_t>(state.range(0))));
  const auto& text = stress_text();
  hw::ComponentSim sim(a);
  for (auto _ : state) {
    auto r = hw::run_protein_list(sim, text);
    benchmark::DoNotOptimize(r);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}

// Tryptic peptides from a synthetic proteome; closer to real pattern sets.
void BM_BuildPeptideAutomaton(benchmark::State& state) {
  const auto records = bio::synthesize_corpus(1000, 329527, 42);
  const auto peptides =
      bio::peptide_patterns(records, {}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto a = ac::build_automaton(peptides);
    benchmark::DoNotOptimize(a);
  }
}

}  // namespace

BENCHMARK(BM_MatchSparse)->Arg(100)->Arg(500)->Arg(1000)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchDense)->Arg(100)->Arg(500)->Arg(1000)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComponentSim)->Arg(100)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildPeptideAutomaton)->Arg(100)->Arg(1200)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
