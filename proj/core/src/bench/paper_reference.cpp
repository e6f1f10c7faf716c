#include "pepscan/bench/paper_reference.hpp"

namespace pepscan::bench {

std::optional<std::size_t> PaperReference::row_of(std::size_t proteins) const noexcept {
  for (std::size_t i = 0; i < kRows; ++i) {
    if (protein_sets[i] == proteins) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PaperReference::col_of(std::size_t peptides) const noexcept {
  for (std::size_t j = 0; j < kCols; ++j) {
    if (peptide_sets[j] == peptides) return j;
  }
  return std::nullopt;
}

const PaperReference& paper_reference() {
  static const PaperReference kPaper{};
  return kPaper;
}

std::size_t residues_for(std::size_t proteins, const PaperReference& paper) {
  if (auto row = paper.row_of(proteins)) return paper.residues[*row];
  return proteins * kResiduesPerProtein;
}

}  // namespace pepscan::bench
