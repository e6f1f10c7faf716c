#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pepscan/ac/alphabet.hpp"

namespace pepscan::ac {

using StateId = std::uint32_t;
using PatternId = std::uint32_t;

inline constexpr StateId kRoot = 0;

// Ordered keyword list; a pattern's id is its position. Duplicates are kept
// and get their own ids.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<std::string_view> patterns);
  explicit PatternSet(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {}

  PatternId add(std::string pattern);

  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  const std::string& operator[](PatternId id) const { return patterns_.at(id); }
  const std::vector<std::string>& patterns() const noexcept { return patterns_; }

  // Throws kEmptyPattern / kInvalidSymbol (position = pattern index).
  void validate(const Alphabet& alphabet) const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<std::string> patterns_;
};

// One record of the per-node edge array: outgoing symbol and target state.
struct Edge {
  unsigned char symbol;
  StateId next;
};

struct SparseNode {
  // Insertion order, scanned linearly.
  std::vector<Edge> edges;
  StateId fail = kRoot;
  std::uint32_t depth = 0;
  // Patterns ending exactly here.
  std::vector<PatternId> own_outputs;
  // own_outputs merged with the outputs along the failure chain, ascending.
  std::vector<PatternId> outputs;

  // nullopt if no edge carries `symbol`.
  std::optional<StateId> find_edge(unsigned char symbol) const noexcept;
};

// Total transition function over every alphabet column (failure links
// compiled away) with per-state merged outputs stored CSR-style.
class DenseTable {
 public:
  DenseTable() = default;
  DenseTable(std::size_t state_count, std::size_t column_count);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t column_count() const noexcept { return column_count_; }

  StateId next(StateId state, std::size_t column) const noexcept {
    return delta_[static_cast<std::size_t>(state) * column_count_ + column];
  }
  void set_next(StateId state, std::size_t column, StateId target) noexcept {
    delta_[static_cast<std::size_t>(state) * column_count_ + column] = target;
  }
  std::span<const StateId> row(StateId state) const noexcept {
    return {delta_.data() + static_cast<std::size_t>(state) * column_count_, column_count_};
  }

  std::span<const PatternId> outputs(StateId state) const noexcept {
    return {output_ids_.data() + output_offsets_[state],
            output_offsets_[state + 1] - output_offsets_[state]};
  }
  void set_outputs(const std::vector<std::vector<PatternId>>& per_state);

  const std::vector<StateId>& raw_delta() const noexcept { return delta_; }

  friend bool operator==(const DenseTable&, const DenseTable&) = default;

 private:
  std::size_t state_count_ = 0;
  std::size_t column_count_ = 0;
  std::vector<StateId> delta_;
  std::vector<std::size_t> output_offsets_{0};
  std::vector<PatternId> output_ids_;
};

// The Aho-Corasick machine. Built in three stages (goto trie, failure links,
// dense table); immutable once compiled and safe to share between threads.
class Automaton {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const PatternSet& patterns() const noexcept { return patterns_; }
  std::size_t pattern_count() const noexcept { return patterns_.size(); }
  std::size_t state_count() const noexcept { return nodes_.size(); }

  const std::vector<SparseNode>& nodes() const noexcept { return nodes_; }
  const SparseNode& node(StateId id) const { return nodes_.at(id); }

  bool has_failure_links() const noexcept { return has_failure_; }
  bool has_dense() const noexcept { return dense_.has_value(); }
  // Throws kInvalidArgument if compile_dense has not run.
  const DenseTable& dense() const;

  // The string spelled by the goto path from the root to `id`.
  std::string state_string(StateId id) const;

 private:
  friend Automaton build_goto(const PatternSet&, const Alphabet&);
  friend Automaton build_failure(Automaton);
  friend Automaton compile_dense(Automaton);

  Alphabet alphabet_;
  PatternSet patterns_;
  std::vector<SparseNode> nodes_;
  std::vector<StateId> parent_;
  std::vector<unsigned char> incoming_;
  bool has_failure_ = false;
  std::optional<DenseTable> dense_;
};

// Trie with one state per distinct non-empty prefix; states are numbered in
// creation order as patterns are inserted in id order.
Automaton build_goto(const PatternSet& patterns, const Alphabet& alphabet = Alphabet{});

// Breadth-first failure links and merged outputs.
Automaton build_failure(Automaton automaton);

// delta[s][c] = goto(s,c) if present, else delta[fail(s)][c]; misses at the
// root loop back to the root and the sentinel column always maps to the root.
Automaton compile_dense(Automaton automaton);

// All three stages.
Automaton build_automaton(const PatternSet& patterns, const Alphabet& alphabet = Alphabet{});

}  // namespace pepscan::ac
