// pepscan: multi-pattern peptide matching toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pepscan/ac/automaton.hpp"
#include "pepscan/ac/match.hpp"
#include "pepscan/ac/pattern_io.hpp"
#include "pepscan/bench/report.hpp"
#include "pepscan/bio/corpus.hpp"
#include "pepscan/bio/fasta.hpp"
#include "pepscan/error.hpp"
#include "pepscan/hdl/table.hpp"
#include "pepscan/hdl/vhdl.hpp"
#include "pepscan/hw/component_sim.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace {

using pepscan::Error;
using pepscan::ErrorCode;
namespace ac = pepscan::ac;
namespace bio = pepscan::bio;
namespace hdl = pepscan::hdl;
namespace hw = pepscan::hw;
namespace bench = pepscan::bench;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void init_logging() {
  auto logger = spdlog::stderr_color_st("pepscan");
  logger->set_pattern("pepscan: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("PEPSCAN_LOG")) {
    const std::string level = env;
    if (level == "error") spdlog::set_level(spdlog::level::err);
    else if (level == "warn") spdlog::set_level(spdlog::level::warn);
    else if (level == "info") spdlog::set_level(spdlog::level::info);
    else if (level == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring PEPSCAN_LOG={} (expected error|warn|info|debug)", level);
  }
}

// Writes to the file at `path`, or stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ac::Alphabet alphabet_for(char sentinel) {
  return ac::Alphabet(ac::Alphabet::kUppercase, static_cast<unsigned char>(sentinel));
}

// Builds from a pattern file, mapping pattern errors back to file lines.
ac::Automaton automaton_from_patterns(const std::string& path, char sentinel) {
  auto file = ac::read_pattern_file(path);
  try {
    return ac::build_automaton(file.patterns, alphabet_for(sentinel));
  } catch (const Error& e) {
    if (e.position() && *e.position() < file.lines.size()) {
      throw Error(e.code(), path + " line " + std::to_string(file.lines[*e.position()]) + ": " +
                                e.what());
    }
    throw;
  }
}

ac::Automaton load_automaton(const std::string& patterns, const std::string& table, char sentinel) {
  if (!patterns.empty() && !table.empty()) {
    throw UsageError("give either --patterns or --table, not both");
  }
  if (!patterns.empty()) return automaton_from_patterns(patterns, sentinel);
  if (!table.empty()) {
    try {
      return hdl::load_table(read_file(table));
    } catch (const Error& e) {
      throw Error(e.code(), table + ": " + e.what());
    }
  }
  throw UsageError("one of --patterns or --table is required");
}

bio::ProteinCorpus load_corpus(const std::string& fasta, char sentinel) {
  try {
    return bio::build_corpus(bio::read_fasta(fasta), sentinel);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), fasta + ": " + e.what());
  }
}

// ---------------------------------------------------------------- digest

struct DigestOptions {
  std::string fasta, out, enzyme = "trypsin";
  int missed = 0;
  std::size_t min_len = 1, max_len = 0, limit = 0;
  bool dedupe = false;
};

int cmd_digest(const DigestOptions& o) {
  bio::DigestParams params;
  params.enzyme = o.enzyme;
  params.missed_cleavages = o.missed;
  params.min_len = o.min_len;
  if (o.max_len) params.max_len = o.max_len;
  params.dedupe = o.dedupe;
  auto records = bio::read_fasta(o.fasta);
  auto peptides = bio::peptide_patterns(records, params, o.limit);
  Output out(o.out);
  ac::write_patterns(out.stream(), peptides);
  spdlog::info("{} peptides from {} records", peptides.size(), records.size());
  return kExitOk;
}

// ---------------------------------------------------------------- build

struct BuildOptions {
  std::string patterns, out;
  char sentinel = '#';
};

int cmd_build(const BuildOptions& o) {
  auto automaton = automaton_from_patterns(o.patterns, o.sentinel);
  Output out(o.out);
  out.stream() << hdl::to_json(hdl::generate_table(automaton));
  std::cerr << "states=" << automaton.state_count() << " patterns=" << automaton.pattern_count()
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- match / simulate

struct MatchOptions {
  std::string patterns, table, fasta, out, engine = "dense", format = "csv", trace;
  char sentinel = '#';
};

int cmd_match(const MatchOptions& o) {
  if (!o.trace.empty() && o.engine != "simulate") {
    throw UsageError("--trace needs the simulate engine");
  }
  auto automaton = load_automaton(o.patterns, o.table, o.sentinel);
  auto corpus = load_corpus(o.fasta, o.sentinel);
  const auto& text = corpus.scan_text();
  if (automaton.alphabet().sentinel() != static_cast<unsigned char>(o.sentinel)) {
    throw Error(ErrorCode::kInvalidArgument, "table sentinel differs from --sentinel");
  }

  std::vector<ac::MatchEvent> events;
  ac::WorkProfile work;
  std::optional<hw::ProteinListRun> sim_run;
  if (o.engine == "sparse") {
    auto r = ac::match_sparse(automaton, text);
    events = std::move(r.events);
    work = r.work;
  } else if (o.engine == "dense") {
    auto r = ac::match_dense(automaton, text);
    events = std::move(r.events);
    work = r.work;
  } else {
    hw::ComponentSim sim(automaton);
    std::unique_ptr<std::ofstream> trace;
    if (!o.trace.empty()) {
      trace = std::make_unique<std::ofstream>(o.trace, std::ios::binary | std::ios::trunc);
      if (!*trace) throw Error(ErrorCode::kIo, "cannot write " + o.trace);
    }
    sim_run = hw::run_protein_list(sim, text, hw::CostModel{}, trace.get());
    events = sim_run->events;
    work.lookups = text.size();
  }

  Output out(o.out);
  auto& os = out.stream();
  const auto& patterns = automaton.patterns();
  const auto& records = corpus.records();
  if (o.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& e : events) {
      auto loc = corpus.locate(e.end_offset);
      const auto& p = patterns[e.pattern_id];
      doc.push_back({{"pattern_id", e.pattern_id},
                     {"pattern", p},
                     {"record_id", records[loc.record].id},
                     {"offset_in_record", loc.offset},
                     {"start_in_record", loc.offset + 1 - p.size()}});
    }
    os << doc.dump(2) << '\n';
  } else {
    os << "pattern_id,pattern,record_id,offset_in_record,start_in_record\n";
    for (const auto& e : events) {
      auto loc = corpus.locate(e.end_offset);
      const auto& p = patterns[e.pattern_id];
      os << e.pattern_id << ',' << p << ',' << records[loc.record].id << ',' << loc.offset << ','
         << loc.offset + 1 - p.size() << '\n';
    }
  }

  std::cerr << "engine=" << o.engine << " events=" << events.size()
            << " records=" << records.size() << " text_bytes=" << text.size()
            << " states=" << automaton.state_count() << " lookups=" << work.lookups
            << " edge_comparisons=" << work.edge_comparisons
            << " failure_traversals=" << work.failure_traversals;
  if (sim_run) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", sim_run->modeled_us);
    std::cerr << " cycles=" << sim_run->cycles << " modeled_us=" << buf;
  }
  std::cerr << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- codegen

struct CodegenOptions {
  std::string patterns, in_table, out, table_out, report, encoding = "binary", entity = "ac_fsm";
  char sentinel = '#';
};

int cmd_codegen(const CodegenOptions& o) {
  auto automaton = load_automaton(o.patterns, o.in_table, o.sentinel);
  hdl::EncodingConfig cfg;
  cfg.entity_name = o.entity;
  cfg.state_encoding =
      o.encoding == "one-hot" ? hdl::StateEncoding::kOneHot : hdl::StateEncoding::kBinary;

  const auto vhdl = hdl::generate_vhdl(automaton, cfg);
  Output(o.out).stream() << vhdl;
  if (!o.table_out.empty()) Output(o.table_out).stream() << hdl::to_json(hdl::generate_table(automaton));

  const auto report = hdl::validate_design(vhdl, automaton, cfg);
  if (!o.report.empty()) Output(o.report).stream() << report.to_json();
  std::cerr << report.to_text();
  return report.passed() ? kExitOk : kExitData;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string config, out = "bench_out";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> repetitions;
  bool paper_tables = false;
};

int cmd_bench(const BenchOptions& o) {
  bench::BenchConfig cfg = o.config.empty() ? bench::BenchConfig{} : bench::read_bench_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (o.repetitions) cfg.repetitions = *o.repetitions;
  cfg.validate();
  spdlog::info("bench config:\n{}", cfg.to_text());

  auto outcome = bench::run_bench(cfg);
  bench::write_bench_outputs(outcome, o.out);
  if (o.paper_tables) std::cout << outcome.report.markdown;
  std::cerr << "wrote report.csv, tables.md, fig4.dat, wallclock.csv to " << o.out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- stats

struct StatsOptions {
  std::string fasta, out, format = "text";
  char sentinel = '#';
};

int cmd_stats(const StatsOptions& o) {
  auto stats = bio::corpus_stats(load_corpus(o.fasta, o.sentinel));
  Output out(o.out);
  out.stream() << (o.format == "json" ? stats.to_json() : stats.to_text());
  return kExitOk;
}

// ---------------------------------------------------------------- synth-corpus

struct SynthOptions {
  std::size_t records = 100, total_length = 53093;
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_synth(const SynthOptions& o) {
  auto records = bio::synthesize_corpus(o.records, o.total_length, o.seed);
  Output out(o.out);
  bio::write_fasta(out.stream(), records);
  return kExitOk;
}

CLI::Option* add_sentinel(CLI::App* app, char& sentinel) {
  return app->add_option("--sentinel", sentinel, "Record separator byte (not A-Z)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  init_logging();

  CLI::App app{"pepscan: Aho-Corasick peptide matching, component simulation and FSM codegen"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pepscan 0.1.0");

  DigestOptions digest;
  auto* c_digest = app.add_subcommand("digest", "Tryptic digestion of a FASTA file into a peptide list");
  c_digest->add_option("--fasta", digest.fasta, "Input FASTA")->required()->check(CLI::ExistingFile);
  c_digest->add_option("--out", digest.out, "Peptide list output (default stdout)");
  c_digest->add_option("--enzyme", digest.enzyme, "Cleavage enzyme")->capture_default_str();
  c_digest->add_option("--missed", digest.missed, "Missed cleavages (0-3)")
      ->check(CLI::Range(0, 3))->capture_default_str();
  c_digest->add_option("--min-len", digest.min_len, "Minimum peptide length")->capture_default_str();
  c_digest->add_option("--max-len", digest.max_len, "Maximum peptide length (0 = none)");
  c_digest->add_option("--limit", digest.limit, "Keep only the first N peptides (0 = all)");
  c_digest->add_flag("--dedupe", digest.dedupe, "Drop repeated peptide sequences");

  BuildOptions build;
  auto* c_build = app.add_subcommand("build", "Build an automaton and write its JSON transition table");
  c_build->add_option("--patterns", build.patterns, "Pattern file")->required()->check(CLI::ExistingFile);
  c_build->add_option("--out", build.out, "Table JSON output (default stdout)");
  add_sentinel(c_build, build.sentinel);

  MatchOptions match;
  auto* c_match = app.add_subcommand("match", "Match patterns against the proteins of a FASTA file");
  MatchOptions simulate;
  simulate.engine = "simulate";
  auto* c_sim = app.add_subcommand("simulate", "Drive the memory-mapped component model over a FASTA file");
  for (auto [cmd, opts] : {std::pair{c_match, &match}, std::pair{c_sim, &simulate}}) {
    cmd->add_option("--patterns", opts->patterns, "Pattern file")->check(CLI::ExistingFile);
    cmd->add_option("--table", opts->table, "JSON transition table instead of --patterns")
        ->check(CLI::ExistingFile);
    cmd->add_option("--fasta", opts->fasta, "Protein FASTA")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", opts->out, "Event output (default stdout)");
    cmd->add_option("--format", opts->format, "Event format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--trace", opts->trace, "Per-byte CSV trace (simulate engine only)");
    add_sentinel(cmd, opts->sentinel);
  }
  c_match->add_option("--engine", match.engine, "Matching engine")
      ->check(CLI::IsMember({"sparse", "dense", "simulate"}))->capture_default_str();

  CodegenOptions codegen;
  auto* c_codegen = app.add_subcommand("codegen", "Generate VHDL (and optionally the JSON table) for an automaton");
  c_codegen->add_option("--patterns", codegen.patterns, "Pattern file")->check(CLI::ExistingFile);
  c_codegen->add_option("--from-table", codegen.in_table, "Read the automaton from a JSON table")
      ->check(CLI::ExistingFile);
  c_codegen->add_option("--out", codegen.out, "VHDL output")->required();
  c_codegen->add_option("--table", codegen.table_out, "Also write the JSON transition table here");
  c_codegen->add_option("--report", codegen.report, "Write the validation report as JSON");
  c_codegen->add_option("--encoding", codegen.encoding, "State encoding")
      ->check(CLI::IsMember({"binary", "one-hot"}))->capture_default_str();
  c_codegen->add_option("--entity", codegen.entity, "VHDL entity name")->capture_default_str();
  add_sentinel(c_codegen, codegen.sentinel);

  BenchOptions bopts;
  auto* c_bench = app.add_subcommand("bench", "Run the protein-set x peptide-set matrix and emit reports");
  c_bench->add_option("--config", bopts.config, "key=value config file")->check(CLI::ExistingFile);
  c_bench->add_option("--out", bopts.out, "Output directory")->capture_default_str();
  c_bench->add_option("--seed", bopts.seed, "Override the config seed");
  c_bench->add_option("--repetitions", bopts.repetitions, "Override wall-clock repetitions");
  c_bench->add_flag("--paper-tables", bopts.paper_tables, "Also print tables.md to stdout");

  StatsOptions stats;
  auto* c_stats = app.add_subcommand("stats", "Record and residue counts of a FASTA file");
  c_stats->add_option("--fasta", stats.fasta, "Protein FASTA")->required()->check(CLI::ExistingFile);
  c_stats->add_option("--out", stats.out, "Output (default stdout)");
  c_stats->add_option("--format", stats.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  add_sentinel(c_stats, stats.sentinel);

  SynthOptions synth;
  auto* c_synth = app.add_subcommand("synth-corpus", "Write a seeded synthetic protein FASTA of exact total length");
  c_synth->add_option("--records", synth.records, "Number of proteins")->capture_default_str();
  c_synth->add_option("--total-length", synth.total_length, "Total residues")->capture_default_str();
  c_synth->add_option("--seed", synth.seed, "RNG seed")->capture_default_str();
  c_synth->add_option("--out", synth.out, "FASTA output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_digest) return cmd_digest(digest);
    if (*c_build) return cmd_build(build);
    if (*c_match) return cmd_match(match);
    if (*c_sim) return cmd_match(simulate);
    if (*c_codegen) return cmd_codegen(codegen);
    if (*c_bench) return cmd_bench(bopts);
    if (*c_stats) return cmd_stats(stats);
    if (*c_synth) return cmd_synth(synth);
  } catch (const UsageError& e) {
    std::cerr << "pepscan: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitData;
  }
  return kExitUsage;
}
