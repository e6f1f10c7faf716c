#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pepscan/bench/matrix.hpp"
#include "pepscan/bench/paper_reference.hpp"
#include "pepscan/hw/cost_model.hpp"

namespace pepscan::bench {

struct CalibrationResidual {
  std::size_t proteins = 0;
  std::size_t peptides = 0;
  double paper_us = 0;
  double model_us = 0;
  // model / reference - 1
  double rel_err = 0;
};

struct CalibrationReport {
  hw::CostModel model;
  std::vector<CalibrationResidual> hw_residuals;
  std::vector<CalibrationResidual> sw_residuals;
  double sw_rms_rel_err = 0;
  double sw_max_abs_rel_err = 0;

  std::string to_text() const;
};

// hw_us_per_char: mean over the published cells of time / residues.
// Software constants: least squares of the published per-character software
// time against edge comparisons per character of `samples`, which must cover
// every published cell. Throws kSingularFit when the edge counts do not vary
// or the fit yields non-positive constants.
CalibrationReport calibrate(const PaperReference& paper,
                            const std::vector<EdgeScanSample>& samples);

// Profiles the stress workload over the published matrix, then fits.
CalibrationReport calibrate(const PaperReference& paper = paper_reference());

}  // namespace pepscan::bench
