#include "pepscan/ac/automaton.hpp"

#include <algorithm>
#include <deque>

#include "pepscan/error.hpp"

namespace pepscan::ac {

PatternSet::PatternSet(std::initializer_list<std::string_view> patterns) {
  patterns_.reserve(patterns.size());
  for (auto p : patterns) patterns_.emplace_back(p);
}

PatternId PatternSet::add(std::string pattern) {
  patterns_.push_back(std::move(pattern));
  return static_cast<PatternId>(patterns_.size() - 1);
}

void PatternSet::validate(const Alphabet& alphabet) const {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    const auto& p = patterns_[i];
    if (p.empty()) {
      throw Error(ErrorCode::kEmptyPattern, "pattern " + std::to_string(i) + " is empty", i);
    }
    for (unsigned char byte : p) {
      if (!alphabet.allows(byte)) {
        throw Error(ErrorCode::kInvalidSymbol,
                    "pattern " + std::to_string(i) + " contains " + describe_byte(byte), i);
      }
    }
  }
}

std::optional<StateId> SparseNode::find_edge(unsigned char symbol) const noexcept {
  for (const auto& e : edges) {
    if (e.symbol == symbol) return e.next;
  }
  return std::nullopt;
}

DenseTable::DenseTable(std::size_t state_count, std::size_t column_count)
    : state_count_(state_count),
      column_count_(column_count),
      delta_(state_count * column_count, kRoot),
      output_offsets_(state_count + 1, 0) {}

void DenseTable::set_outputs(const std::vector<std::vector<PatternId>>& per_state) {
  output_offsets_.assign(state_count_ + 1, 0);
  output_ids_.clear();
  for (std::size_t s = 0; s < state_count_ && s < per_state.size(); ++s) {
    output_ids_.insert(output_ids_.end(), per_state[s].begin(), per_state[s].end());
    output_offsets_[s + 1] = output_ids_.size();
  }
  for (std::size_t s = per_state.size(); s < state_count_; ++s) {
    output_offsets_[s + 1] = output_ids_.size();
  }
}

const DenseTable& Automaton::dense() const {
  if (!dense_) throw Error(ErrorCode::kInvalidArgument, "dense table has not been compiled");
  return *dense_;
}

std::string Automaton::state_string(StateId id) const {
  std::string out;
  while (id != kRoot) {
    out.push_back(static_cast<char>(incoming_.at(id)));
    id = parent_.at(id);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Automaton build_goto(const PatternSet& patterns, const Alphabet& alphabet) {
  patterns.validate(alphabet);

  Automaton a;
  a.alphabet_ = alphabet;
  a.patterns_ = patterns;
  a.nodes_.emplace_back();
  a.parent_.push_back(kRoot);
  a.incoming_.push_back(0);

  for (std::size_t id = 0; id < patterns.size(); ++id) {
    StateId state = kRoot;
    for (unsigned char byte : patterns[static_cast<PatternId>(id)]) {
      if (auto next = a.nodes_[state].find_edge(byte)) {
        state = *next;
        continue;
      }
      auto fresh = static_cast<StateId>(a.nodes_.size());
      a.nodes_[state].edges.push_back({byte, fresh});
      SparseNode node;
      node.depth = a.nodes_[state].depth + 1;
      a.nodes_.push_back(std::move(node));
      a.parent_.push_back(state);
      a.incoming_.push_back(byte);
      state = fresh;
    }
    a.nodes_[state].own_outputs.push_back(static_cast<PatternId>(id));
  }
  for (auto& n : a.nodes_) n.outputs = n.own_outputs;
  return a;
}

Automaton build_failure(Automaton a) {
  auto& nodes = a.nodes_;
  for (auto& n : nodes) n.outputs = n.own_outputs;

  std::deque<StateId> queue;
  nodes[kRoot].fail = kRoot;
  for (const auto& e : nodes[kRoot].edges) {
    nodes[e.next].fail = kRoot;
    queue.push_back(e.next);
  }
  while (!queue.empty()) {
    StateId u = queue.front();
    queue.pop_front();
    for (const auto& e : nodes[u].edges) {
      StateId v = e.next;
      StateId f = nodes[u].fail;
      std::optional<StateId> target;
      while (true) {
        target = nodes[f].find_edge(e.symbol);
        if (target || f == kRoot) break;
        f = nodes[f].fail;
      }
      nodes[v].fail = target.value_or(kRoot);
      // Parents are dequeued before children, so fail(v) (shallower) already
      // holds its merged outputs.
      auto& out = nodes[v].outputs;
      const auto& inherited = nodes[nodes[v].fail].outputs;
      out.insert(out.end(), inherited.begin(), inherited.end());
      std::sort(out.begin(), out.end());
      queue.push_back(v);
    }
  }
  a.has_failure_ = true;
  return a;
}

Automaton compile_dense(Automaton a) {
  if (!a.has_failure_) a = build_failure(std::move(a));

  const auto& alphabet = a.alphabet_;
  const std::size_t columns = alphabet.column_count();
  DenseTable table(a.nodes_.size(), columns);

  // BFS order guarantees fail(s) is complete before s.
  std::vector<StateId> order;
  order.reserve(a.nodes_.size());
  order.push_back(kRoot);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& e : a.nodes_[order[i]].edges) order.push_back(e.next);
  }

  for (StateId s : order) {
    const auto& node = a.nodes_[s];
    for (std::size_t col = 0; col < alphabet.symbol_count(); ++col) {
      auto symbol = static_cast<unsigned char>(alphabet.symbols()[col]);
      if (auto next = node.find_edge(symbol)) {
        table.set_next(s, col, *next);
      } else {
        table.set_next(s, col, s == kRoot ? kRoot : table.next(node.fail, col));
      }
    }
    table.set_next(s, alphabet.sentinel_column(), kRoot);
  }

  std::vector<std::vector<PatternId>> outputs;
  outputs.reserve(a.nodes_.size());
  for (const auto& n : a.nodes_) outputs.push_back(n.outputs);
  table.set_outputs(outputs);

  a.dense_ = std::move(table);
  return a;
}

Automaton build_automaton(const PatternSet& patterns, const Alphabet& alphabet) {
  return compile_dense(build_failure(build_goto(patterns, alphabet)));
}

}  // namespace pepscan::ac
