#include "pepscan/ac/match.hpp"

#include <algorithm>
#include <cstring>

#include "pepscan/error.hpp"

namespace pepscan::ac {
namespace {

[[noreturn]] void throw_invalid_symbol(std::size_t offset, unsigned char byte) {
  throw Error(ErrorCode::kInvalidSymbol,
              "text offset " + std::to_string(offset) + " holds " + describe_byte(byte), offset);
}

[[gnu::noinline]] void emit(std::vector<MatchEvent>& events, const std::vector<PatternId>& ids,
                           std::size_t offset) {
  for (PatternId id : ids) events.push_back({id, offset});
}

}  // namespace

MatchResult match_sparse(const Automaton& automaton, std::string_view text) {
  if (!automaton.has_failure_links()) {
    throw Error(ErrorCode::kInvalidArgument, "sparse matching needs failure links");
  }
  const auto& alphabet = automaton.alphabet();
  // Hot-loop invariants are copied into locals so they stay in registers.
  const SparseNode* const nodes = automaton.nodes().data();
  const char* const data = text.data();
  const std::size_t size = text.size();

  MatchResult result;
  std::uint64_t comparisons = 0;
  std::uint64_t traversals = 0;
  StateId state = kRoot;
  for (std::size_t offset = 0; offset < size; ++offset) {
    const auto byte = static_cast<unsigned char>(data[offset]);
    if (alphabet.column(byte) == Alphabet::kNoColumn) throw_invalid_symbol(offset, byte);

    while (true) {
      const SparseNode& node = nodes[state];
      const Edge* const first = node.edges.data();
      const Edge* const last = first + node.edges.size();
      const Edge* e = first;
      while (e != last && e->symbol != byte) ++e;
      // Every edge up to and including the hit was compared.
      comparisons += static_cast<std::uint64_t>(e - first) + (e != last ? 1 : 0);
      if (e != last) {
        state = e->next;
        break;
      }
      if (state == kRoot) break;
      state = node.fail;
      ++traversals;
    }
    if (!nodes[state].outputs.empty()) [[unlikely]] {
      emit(result.events, nodes[state].outputs, offset);
    }
  }
  result.work.edge_comparisons = comparisons;
  result.work.failure_traversals = traversals;
  return result;
}

MatchResult match_dense(const Automaton& automaton, std::string_view text) {
  const auto& table = automaton.dense();
  const auto& alphabet = automaton.alphabet();

  MatchResult result;
  StateId state = kRoot;
  for (std::size_t offset = 0; offset < text.size(); ++offset) {
    auto byte = static_cast<unsigned char>(text[offset]);
    int column = alphabet.column(byte);
    if (column == Alphabet::kNoColumn) throw_invalid_symbol(offset, byte);
    state = table.next(state, static_cast<std::size_t>(column));
    for (PatternId id : table.outputs(state)) result.events.push_back({id, offset});
  }
  result.work.lookups = text.size();
  return result;
}

std::vector<MatchEvent> match_naive(const PatternSet& patterns, std::string_view text,
                                    const Alphabet& alphabet) {
  for (std::size_t offset = 0; offset < text.size(); ++offset) {
    auto byte = static_cast<unsigned char>(text[offset]);
    if (alphabet.column(byte) == Alphabet::kNoColumn) throw_invalid_symbol(offset, byte);
  }
  std::vector<MatchEvent> events;
  for (std::size_t id = 0; id < patterns.size(); ++id) {
    std::string_view p = patterns[static_cast<PatternId>(id)];
    if (p.empty() || p.size() > text.size()) continue;
    for (std::size_t i = 0; i + p.size() <= text.size(); ++i) {
      if (text[i] == p[0] && std::memcmp(text.data() + i, p.data(), p.size()) == 0) {
        events.push_back({static_cast<PatternId>(id), i + p.size() - 1});
      }
    }
  }
  std::sort(events.begin(), events.end());
  return events;
}

}  // namespace pepscan::ac
