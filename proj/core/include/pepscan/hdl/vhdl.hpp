#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"

namespace pepscan::hdl {

enum class StateEncoding { kBinary, kOneHot };

struct EncodingConfig {
  StateEncoding state_encoding = StateEncoding::kBinary;
  std::string entity_name = "ac_fsm";
};

inline constexpr std::size_t kCharWidth = 8;
inline constexpr std::size_t kMaxRegisterWidth = 32;
// One-hot registers grow with the state count; beyond this the design is
// rejected instead of emitting megabyte-sized literals.
inline constexpr std::size_t kMaxOneHotStates = 4096;

// ceil(log2(state_count)), at least 1, for binary; state_count for one-hot.
std::size_t state_register_width(std::size_t state_count, StateEncoding encoding);
// ceil(log2(pattern_count + 1)), at least 1.
std::size_t id_width(std::size_t pattern_count);

bool is_vhdl_identifier(std::string_view name);

// Port names in declaration order.
const std::vector<std::string>& port_names();

// VHDL-93 Moore machine: one entity, a clocked transition process with one
// case arm per state (dense delta, synchronous reset) and an output decode
// process driving match_valid / match_count from the current state.
// Throws kTooManyStates, kInvalidIdentifier, kInvalidArgument (no dense table).
std::string generate_vhdl(const ac::Automaton& automaton, const EncodingConfig& config = {});

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool passed() const noexcept;
  const ValidationCheck* find(std::string_view name) const noexcept;
  std::string to_text() const;
  std::string to_json() const;
};

// Structural scan of generated VHDL against the automaton: entity name, port
// list, state register width, transition arm count, and target range.
// Findings go into the report; nothing is thrown.
ValidationReport validate_design(std::string_view vhdl, const ac::Automaton& automaton,
                                 const EncodingConfig& config = {});

}  // namespace pepscan::hdl
