#include "pepscan/bench/matrix.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "pepscan/bench/paper_reference.hpp"
#include "pepscan/bench/workload.hpp"
#include "pepscan/error.hpp"
#include "pepscan/hw/component_sim.hpp"

namespace pepscan::bench {
namespace {

template <typename F>
double median_us(std::size_t repetitions, F&& body) {
  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
  }
  std::sort(samples.begin(), samples.end());
  const auto mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

std::string cell_name(std::size_t proteins, std::size_t peptides) {
  return "cell (" + std::to_string(proteins) + " proteins, " + std::to_string(peptides) +
         " peptides)";
}

}  // namespace

std::vector<EdgeScanSample> profile_workload(const BenchConfig& config) {
  config.validate();
  const NestedPrefixFamily family(config.peptide_set_sizes.back(), config.seed);
  std::vector<ac::Automaton> automata;
  for (auto peptides : config.peptide_set_sizes) {
    automata.push_back(ac::build_automaton(family.patterns(peptides)));
  }
  std::vector<EdgeScanSample> samples;
  for (auto proteins : config.protein_set_sizes) {
    const auto text = family.text(residues_for(proteins));
    for (std::size_t j = 0; j < automata.size(); ++j) {
      auto result = ac::match_sparse(automata[j], text);
      samples.push_back(
          {proteins, config.peptide_set_sizes[j], text.size(), result.work.edge_comparisons});
    }
  }
  return samples;
}

std::vector<BenchCell> run_matrix(const BenchConfig& config, const hw::CostModel& model) {
  config.validate();
  model.validate();
  const NestedPrefixFamily family(config.peptide_set_sizes.back(), config.seed);

  std::vector<ac::Automaton> automata;
  for (auto peptides : config.peptide_set_sizes) {
    automata.push_back(ac::build_automaton(family.patterns(peptides)));
  }

  std::vector<BenchCell> cells;
  for (auto proteins : config.protein_set_sizes) {
    const auto text = family.text(residues_for(proteins));
    for (std::size_t j = 0; j < automata.size(); ++j) {
      const auto& automaton = automata[j];
      BenchCell cell;
      cell.proteins = proteins;
      cell.peptides = config.peptide_set_sizes[j];
      cell.text_length = text.size();
      cell.state_count = automaton.state_count();

      try {
        ac::MatchResult sparse;
        cell.measured_sw_us =
            median_us(config.repetitions, [&] { sparse = ac::match_sparse(automaton, text); });
        ac::MatchResult dense;
        cell.measured_dense_us =
            median_us(config.repetitions, [&] { dense = ac::match_dense(automaton, text); });

        hw::ComponentSim sim(automaton);
        auto run = hw::run_protein_list(sim, text, model);

        if (sparse.events != dense.events || run.events != dense.events) {
          throw Error(ErrorCode::kInvalidArgument, "engines disagree");
        }
        cell.event_count = dense.events.size();
        cell.sparse_work = sparse.work;
        cell.dense_lookups = dense.work.lookups;
        cell.hw_cycles = run.cycles;
        cell.modeled_hw_us = run.modeled_us;
        cell.modeled_sw_us =
            hw::estimate_time(model, hw::Engine::kSoftware, text.size(), &sparse.work);
        cell.speedup = cell.modeled_sw_us / cell.modeled_hw_us;
      } catch (const Error& e) {
        throw Error(e.code(), cell_name(cell.proteins, cell.peptides) + ": " + e.what());
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace pepscan::bench
