#include "pepscan/hw/cost_model.hpp"

#include <cmath>

#include "pepscan/error.hpp"

namespace pepscan::hw {

void CostModel::validate() const {
  for (double v : {hw_us_per_char, sw_us_base_per_char, sw_us_per_edge_scan}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "cost model constants must be finite and positive");
    }
  }
}

double estimate_time(const CostModel& model, Engine engine, std::size_t text_len,
                     const ac::WorkProfile* work) {
  const auto len = static_cast<double>(text_len);
  if (engine == Engine::kHardware) return len * model.hw_us_per_char;
  if (work == nullptr) {
    throw Error(ErrorCode::kMissingWorkProfile, "software estimate needs edge comparison counts");
  }
  return len * model.sw_us_base_per_char +
         static_cast<double>(work->edge_comparisons) * model.sw_us_per_edge_scan;
}

}  // namespace pepscan::hw
