#include "pepscan/hw/component_sim.hpp"

#include <ostream>

#include "pepscan/error.hpp"

namespace pepscan::hw {

ComponentSim::ComponentSim(const ac::Automaton& automaton, double clock_mhz)
    : automaton_(&automaton), clock_mhz_(clock_mhz) {
  if (!automaton.has_dense()) {
    throw Error(ErrorCode::kInvalidArgument, "component needs a dense-compiled automaton");
  }
  if (!(clock_mhz > 0.0)) throw Error(ErrorCode::kInvalidArgument, "clock must be positive");
}

void ComponentSim::reset() noexcept {
  state_ = ac::kRoot;
  result_ = 0;
  fifo_.clear();
}

void ComponentSim::step(unsigned char byte) {
  const auto& alphabet = automaton_->alphabet();
  int column = alphabet.column(byte);
  if (column == ac::Alphabet::kNoColumn) {
    throw Error(ErrorCode::kInvalidSymbol, "CHAR_IN write of " + describe_byte(byte), position_);
  }
  const auto& table = automaton_->dense();
  state_ = table.next(state_, static_cast<std::size_t>(column));
  auto outputs = table.outputs(state_);
  fifo_.insert(fifo_.end(), outputs.begin(), outputs.end());
  result_ = static_cast<std::uint32_t>(outputs.size());
  ++position_;
  cycles_ += kCyclesPerChar;
}

void ComponentSim::write_register(std::uint32_t addr, std::uint32_t value) {
  switch (addr) {
    case reg::kCharIn:
      step(static_cast<unsigned char>(value & 0xFFu));
      return;
    case reg::kMatchFifo:
    case reg::kStatus:
      throw Error(ErrorCode::kWriteToReadOnly, "register " + std::to_string(addr) + " is read-only",
                  addr);
    case reg::kControl:
      if (value == reg::kControlReset) reset();
      return;
    default:
      throw Error(ErrorCode::kInvalidAddress, "no register at address " + std::to_string(addr),
                  addr);
  }
}

std::uint32_t ComponentSim::read_register(std::uint32_t addr) {
  switch (addr) {
    case reg::kResult:
      return result_;
    case reg::kMatchFifo: {
      if (fifo_.empty()) return reg::kNoMatch;
      auto id = fifo_.front();
      fifo_.pop_front();
      return id;
    }
    case reg::kStatus:
      return reg::kStatusReady | (fifo_.empty() ? 0u : reg::kStatusFifoNonEmpty);
    default:
      throw Error(ErrorCode::kInvalidAddress,
                  "no readable register at address " + std::to_string(addr), addr);
  }
}

ProteinListRun run_protein_list(ComponentSim& sim, std::string_view text, const CostModel& model,
                                std::ostream* trace) {
  ProteinListRun run;
  sim.write_register(reg::kControl, reg::kControlReset);
  const auto start_cycles = sim.cycles();
  if (trace) *trace << kTraceHeader << '\n';

  for (std::size_t offset = 0; offset < text.size(); ++offset) {
    const auto byte = static_cast<unsigned char>(text[offset]);
    const auto before = sim.state();
    try {
      sim.write_register(reg::kCharIn, byte);
    } catch (const Error& e) {
      throw Error(e.code(), "at text offset " + std::to_string(offset) + ": " + e.what(), offset);
    }
    const auto count = sim.read_register(reg::kResult);
    for (std::uint32_t i = 0; i < count; ++i) {
      run.events.push_back({sim.read_register(reg::kMatchFifo), offset});
    }
    if (trace) {
      *trace << offset << ',' << static_cast<char>(byte) << ',' << before << ',' << sim.state()
             << ',' << count << ',' << sim.cycles() - start_cycles << '\n';
    }
  }
  run.cycles = sim.cycles() - start_cycles;
  run.modeled_us = estimate_time(model, Engine::kHardware, text.size());
  return run;
}

}  // namespace pepscan::hw
