#include "pepscan/bench/calibrate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pepscan/error.hpp"

namespace pepscan::bench {

CalibrationReport calibrate(const PaperReference& paper,
                            const std::vector<EdgeScanSample>& samples) {
  constexpr std::size_t kCells = PaperReference::kRows * PaperReference::kCols;
  CalibrationReport report;

  double hw_sum = 0;
  for (std::size_t i = 0; i < PaperReference::kRows; ++i) {
    for (std::size_t j = 0; j < PaperReference::kCols; ++j) {
      hw_sum += paper.hw_us[i][j] / static_cast<double>(paper.residues[i]);
    }
  }
  report.model.hw_us_per_char = hw_sum / kCells;

  // Per-character form: sw_us / L = base + per_edge * (edges / L).
  std::vector<double> x, y;
  for (std::size_t i = 0; i < PaperReference::kRows; ++i) {
    for (std::size_t j = 0; j < PaperReference::kCols; ++j) {
      const EdgeScanSample* hit = nullptr;
      for (const auto& s : samples) {
        if (s.proteins == paper.protein_sets[i] && s.peptides == paper.peptide_sets[j]) hit = &s;
      }
      if (hit == nullptr || hit->text_length == 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "no edge-scan sample for published cell (" +
                        std::to_string(paper.protein_sets[i]) + ", " +
                        std::to_string(paper.peptide_sets[j]) + ")");
      }
      x.push_back(static_cast<double>(hit->edge_comparisons) /
                  static_cast<double>(hit->text_length));
      y.push_back(paper.sw_us[i][j] / static_cast<double>(paper.residues[i]));
    }
  }
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < kCells; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= kCells;
  my /= kCells;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < kCells; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (!(sxx > 1e-12 * (1 + mx * mx))) {
    throw Error(ErrorCode::kSingularFit, "edge comparisons per character do not vary");
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  if (!(slope > 0) || !(intercept > 0)) {
    throw Error(ErrorCode::kSingularFit, "fit gave non-positive constants (base " +
                                             std::to_string(intercept) + ", per edge " +
                                             std::to_string(slope) + ")");
  }
  report.model.sw_us_base_per_char = intercept;
  report.model.sw_us_per_edge_scan = slope;

  double sq = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < PaperReference::kRows; ++i) {
    const auto len = static_cast<double>(paper.residues[i]);
    for (std::size_t j = 0; j < PaperReference::kCols; ++j, ++k) {
      const double hw = len * report.model.hw_us_per_char;
      report.hw_residuals.push_back({paper.protein_sets[i], paper.peptide_sets[j],
                                     paper.hw_us[i][j], hw, hw / paper.hw_us[i][j] - 1});
      const double sw = len * (intercept + slope * x[k]);
      const double rel = sw / paper.sw_us[i][j] - 1;
      report.sw_residuals.push_back(
          {paper.protein_sets[i], paper.peptide_sets[j], paper.sw_us[i][j], sw, rel});
      sq += rel * rel;
      report.sw_max_abs_rel_err = std::max(report.sw_max_abs_rel_err, std::abs(rel));
    }
  }
  report.sw_rms_rel_err = std::sqrt(sq / kCells);
  return report;
}

CalibrationReport calibrate(const PaperReference& paper) {
  BenchConfig config;
  config.protein_set_sizes.assign(paper.protein_sets.begin(), paper.protein_sets.end());
  config.peptide_set_sizes.assign(paper.peptide_sets.begin(), paper.peptide_sets.end());
  return calibrate(paper, profile_workload(config));
}

std::string CalibrationReport::to_text() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line,
                "hw_us_per_char=%.10f sw_us_base_per_char=%.10f sw_us_per_edge_scan=%.10f\n",
                model.hw_us_per_char, model.sw_us_base_per_char, model.sw_us_per_edge_scan);
  out << line;
  out << "engine proteins peptides paper_us model_us rel_err\n";
  for (const auto* set : {&hw_residuals, &sw_residuals}) {
    const char* engine = set == &hw_residuals ? "hw" : "sw";
    for (const auto& r : *set) {
      std::snprintf(line, sizeof line, "%s %zu %zu %.0f %.1f %+.4f\n", engine, r.proteins,
                    r.peptides, r.paper_us, r.model_us, r.rel_err);
      out << line;
    }
  }
  std::snprintf(line, sizeof line, "sw_rms_rel_err=%.4f sw_max_abs_rel_err=%.4f\n",
                sw_rms_rel_err, sw_max_abs_rel_err);
  out << line;
  return out.str();
}

}  // namespace pepscan::bench
