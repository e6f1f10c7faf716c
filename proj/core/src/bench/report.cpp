#include "pepscan/bench/report.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "pepscan/error.hpp"

namespace pepscan::bench {
namespace {

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

struct PaperCell {
  double hw_us, sw_us, speedup;
};

std::optional<PaperCell> paper_cell(const PaperReference& paper, const BenchCell& c) {
  auto row = paper.row_of(c.proteins);
  auto col = paper.col_of(c.peptides);
  if (!row || !col) return std::nullopt;
  return PaperCell{paper.hw_us[*row][*col], paper.sw_us[*row][*col], paper.speedup[*row][*col]};
}

// Rows = protein sets, columns = peptide sets, in first-seen order.
struct Grid {
  std::vector<std::size_t> rows, cols;
  std::map<std::pair<std::size_t, std::size_t>, const BenchCell*> at;
};

Grid make_grid(const std::vector<BenchCell>& cells) {
  Grid g;
  for (const auto& c : cells) {
    if (std::find(g.rows.begin(), g.rows.end(), c.proteins) == g.rows.end()) {
      g.rows.push_back(c.proteins);
    }
    if (std::find(g.cols.begin(), g.cols.end(), c.peptides) == g.cols.end()) {
      g.cols.push_back(c.peptides);
    }
    g.at[{c.proteins, c.peptides}] = &c;
  }
  return g;
}

template <typename Model, typename Paper>
void markdown_table(std::ostringstream& out, const Grid& g, const PaperReference& paper,
                    const char* title, const char* number, Model model, Paper paper_value) {
  out << "## " << title << "\n\n| proteins \\ peptides |";
  for (auto p : g.cols) out << ' ' << p << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < g.cols.size(); ++i) out << "---|";
  out << '\n';
  for (auto r : g.rows) {
    out << "| " << r << " |";
    for (auto p : g.cols) {
      auto it = g.at.find({r, p});
      if (it == g.at.end()) {
        out << " |";
        continue;
      }
      const auto& c = *it->second;
      const double m = model(c);
      out << ' ' << fmt(number, m);
      if (auto pc = paper_cell(paper, c)) {
        const double pv = paper_value(*pc);
        out << " (paper " << fmt(number, pv) << ", " << fmt("%+.2f%%", 100 * (m / pv - 1)) << ')';
      }
      out << " |";
    }
    out << '\n';
  }
  out << '\n';
}

}  // namespace

BenchReport emit_report(const std::vector<BenchCell>& cells, const PaperReference& paper,
                        const CalibrationReport* calibration) {
  BenchReport report;

  std::ostringstream csv;
  csv << kReportCsvHeader << '\n';
  for (const auto& c : cells) {
    csv << c.proteins << ',' << c.peptides << ',' << fmt("%.1f", c.modeled_sw_us) << ','
        << fmt("%.1f", c.modeled_hw_us) << ',' << fmt("%.4f", c.speedup) << ',';
    if (auto pc = paper_cell(paper, c)) {
      csv << fmt("%.0f", pc->sw_us) << ',' << fmt("%.0f", pc->hw_us) << ','
          << fmt("%.2f", pc->speedup) << ',' << fmt("%.6f", c.speedup / pc->speedup - 1);
    } else {
      csv << ",,,";
    }
    csv << '\n';
  }
  report.csv = csv.str();

  const Grid g = make_grid(cells);
  std::ostringstream md;
  md << "# Matching time: model vs published measurements\n\n"
     << "Times in microseconds on the modeled 50 MHz soft-core system. Relative\n"
     << "error is model / paper - 1.\n\n";
  markdown_table(
      md, g, paper, "Co-design (hardware component) matching time, us", "%.0f",
      [](const BenchCell& c) { return c.modeled_hw_us; }, [](const PaperCell& p) { return p.hw_us; });
  markdown_table(
      md, g, paper, "Software-only matching time, us", "%.0f",
      [](const BenchCell& c) { return c.modeled_sw_us; }, [](const PaperCell& p) { return p.sw_us; });
  markdown_table(
      md, g, paper, "Speedup, software-only / co-design", "%.2f",
      [](const BenchCell& c) { return c.speedup; }, [](const PaperCell& p) { return p.speedup; });

  if (calibration) {
    const auto& m = calibration->model;
    md << "## Calibration\n\n"
       << "| constant | value |\n|---|---|\n"
       << "| hw_us_per_char | " << fmt("%.10f", m.hw_us_per_char) << " |\n"
       << "| sw_us_base_per_char | " << fmt("%.10f", m.sw_us_base_per_char) << " |\n"
       << "| sw_us_per_edge_scan | " << fmt("%.10f", m.sw_us_per_edge_scan) << " |\n\n"
       << "| engine | proteins | peptides | paper us | model us | rel err |\n"
       << "|---|---|---|---|---|---|\n";
    for (const auto* set : {&calibration->hw_residuals, &calibration->sw_residuals}) {
      const char* engine = set == &calibration->hw_residuals ? "hw" : "sw";
      for (const auto& r : *set) {
        md << "| " << engine << " | " << r.proteins << " | " << r.peptides << " | "
           << fmt("%.0f", r.paper_us) << " | " << fmt("%.1f", r.model_us) << " | "
           << fmt("%+.4f", r.rel_err) << " |\n";
      }
    }
    md << "\nsoftware fit: rms relative error " << fmt("%.4f", calibration->sw_rms_rel_err)
       << ", max " << fmt("%.4f", calibration->sw_max_abs_rel_err) << "\n";
  }
  report.markdown = md.str();

  std::ostringstream fig;
  fig << "# text_length sw_us hw_us";
  if (!g.cols.empty()) fig << "  (peptides=" << g.cols.back() << ")";
  fig << '\n';
  if (!g.cols.empty()) {
    for (auto r : g.rows) {
      auto it = g.at.find({r, g.cols.back()});
      if (it == g.at.end()) continue;
      const auto& c = *it->second;
      fig << c.text_length << ' ' << fmt("%.1f", c.modeled_sw_us) << ' '
          << fmt("%.1f", c.modeled_hw_us) << '\n';
    }
  }
  report.fig4 = fig.str();
  return report;
}

std::string wallclock_csv(const std::vector<BenchCell>& cells) {
  std::ostringstream out;
  out << "proteins,peptides,text_length,states,sparse_us,dense_us,sparse_ns_per_char,"
         "dense_ns_per_char,edge_comparisons,failure_traversals\n";
  for (const auto& c : cells) {
    const double len = c.text_length ? static_cast<double>(c.text_length) : 1.0;
    out << c.proteins << ',' << c.peptides << ',' << c.text_length << ',' << c.state_count << ','
        << fmt("%.1f", c.measured_sw_us) << ',' << fmt("%.1f", c.measured_dense_us) << ','
        << fmt("%.3f", 1000 * c.measured_sw_us / len) << ','
        << fmt("%.3f", 1000 * c.measured_dense_us / len) << ',' << c.sparse_work.edge_comparisons
        << ',' << c.sparse_work.failure_traversals << '\n';
  }
  return out.str();
}

BenchOutcome run_bench(const BenchConfig& config) {
  BenchOutcome outcome;
  outcome.calibration = calibrate(paper_reference());
  outcome.cells = run_matrix(config, outcome.calibration.model);
  outcome.report = emit_report(outcome.cells, paper_reference(), &outcome.calibration);
  return outcome;
}

void write_bench_outputs(const BenchOutcome& outcome, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto put = [&](const char* name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + (dir / name).string());
    out << body;
  };
  put("report.csv", outcome.report.csv);
  put("tables.md", outcome.report.markdown);
  put("fig4.dat", outcome.report.fig4);
  put("wallclock.csv", wallclock_csv(outcome.cells));
}

}  // namespace pepscan::bench
