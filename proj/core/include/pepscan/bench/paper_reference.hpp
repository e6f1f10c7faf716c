#pragma once

#include <array>
#include <cstddef>
#include <optional>

namespace pepscan::bench {

// Published measurements of the 50 MHz soft-core system. Rows are protein
// sets, columns peptide sets. Software timings are printed with thousands
// separators in the source ("311 424", "1 018544"); they are stored here with
// the spacing removed.
struct PaperReference {
  static constexpr std::size_t kRows = 3;
  static constexpr std::size_t kCols = 4;

  std::array<std::size_t, kRows> protein_sets{100, 500, 1000};
  std::array<std::size_t, kCols> peptide_sets{100, 500, 1000, 1200};
  // Amino acids in each protein set.
  std::array<std::size_t, kRows> residues{53093, 172141, 329527};

  // Co-design matching time, us.
  std::array<std::array<double, kCols>, kRows> hw_us{{
      {59209, 59209, 59171, 59167},
      {192637, 192646, 192602, 192602},
      {367323, 367323, 367323, 367137},
  }};
  // Software-only matching time, us.
  std::array<std::array<double, kCols>, kRows> sw_us{{
      {311424, 357435, 446742, 625682},
      {1018544, 1164763, 1616889, 1848193},
      {1931712, 2231601, 3102777, 3428774},
  }};
  // Software / co-design.
  std::array<std::array<double, kCols>, kRows> speedup{{
      {5.26, 6.04, 7.55, 10.57},
      {5.29, 6.05, 8.39, 9.60},
      {5.26, 6.08, 8.45, 9.34},
  }};
  // Rounded per-column speedups quoted in the discussion.
  std::array<double, kCols> quoted_column_speedup{5, 6, 8, 10};

  std::optional<std::size_t> row_of(std::size_t proteins) const noexcept;
  std::optional<std::size_t> col_of(std::size_t peptides) const noexcept;
};

const PaperReference& paper_reference();

// Residue count used for a protein set: the published count when the set
// size appears in the table, otherwise proteins * kResiduesPerProtein.
inline constexpr std::size_t kResiduesPerProtein = 330;
std::size_t residues_for(std::size_t proteins, const PaperReference& paper = paper_reference());

}  // namespace pepscan::bench
