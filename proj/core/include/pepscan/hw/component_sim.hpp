#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "pepscan/ac/automaton.hpp"
#include "pepscan/ac/match.hpp"
#include "pepscan/hw/cost_model.hpp"

namespace pepscan::hw {

// Memory-mapped slave register map of the matching component.
//
//   addr 0  write  CHAR_IN     next input byte (low 8 bits); one transition
//           read   RESULT      matches ending at the last stepped position
//   addr 1  read   MATCH_FIFO  pops one pattern id, kNoMatch when empty
//   addr 2  read   STATUS      bit0 fifo non-empty, bit1 ready
//   addr 3  write  CONTROL     kControlReset: back to root, fifo cleared
namespace reg {
inline constexpr std::uint32_t kCharIn = 0;
inline constexpr std::uint32_t kResult = 0;
inline constexpr std::uint32_t kMatchFifo = 1;
inline constexpr std::uint32_t kStatus = 2;
inline constexpr std::uint32_t kControl = 3;

inline constexpr std::uint32_t kNoMatch = 0xFFFFFFFFu;
inline constexpr std::uint32_t kStatusFifoNonEmpty = 1u << 0;
inline constexpr std::uint32_t kStatusReady = 1u << 1;
inline constexpr std::uint32_t kControlReset = 1;
}  // namespace reg

// Bus-functional model of the custom component. Holds a reference to a
// dense-compiled automaton, which must outlive the simulator. Single stream:
// not safe to share while a run is in progress.
class ComponentSim {
 public:
  static constexpr double kDefaultClockMhz = 50.0;
  static constexpr std::uint64_t kCyclesPerChar = 1;

  explicit ComponentSim(const ac::Automaton& automaton, double clock_mhz = kDefaultClockMhz);

  // Throws kInvalidAddress, kWriteToReadOnly (addr 1, 2), kInvalidSymbol.
  void write_register(std::uint32_t addr, std::uint32_t value);
  // Throws kInvalidAddress (addr 3 is write-only).
  std::uint32_t read_register(std::uint32_t addr);

  const ac::Automaton& automaton() const noexcept { return *automaton_; }
  ac::StateId state() const noexcept { return state_; }
  std::uint64_t position() const noexcept { return position_; }
  std::uint64_t cycles() const noexcept { return cycles_; }
  std::uint32_t result() const noexcept { return result_; }
  std::size_t fifo_size() const noexcept { return fifo_.size(); }
  double clock_mhz() const noexcept { return clock_mhz_; }
  // Raw FPGA time of the accumulated cycles.
  double cycle_time_us() const noexcept { return static_cast<double>(cycles_) / clock_mhz_; }

 private:
  void step(unsigned char byte);
  void reset() noexcept;

  const ac::Automaton* automaton_;
  double clock_mhz_;
  ac::StateId state_ = ac::kRoot;
  std::uint64_t position_ = 0;
  std::uint64_t cycles_ = 0;
  std::uint32_t result_ = 0;
  std::deque<ac::PatternId> fifo_;
};

struct ProteinListRun {
  std::vector<ac::MatchEvent> events;
  std::uint64_t cycles = 0;
  double modeled_us = 0.0;
};

// The driver loop: reset, then for every byte write CHAR_IN, read RESULT and
// drain MATCH_FIFO that many times. Event offsets are relative to the start
// of `text`. When `trace` is set, one CSV row per byte is written:
// position,input_byte,state_before,state_after,result_count,cycles
// Errors from the component are rethrown with the text offset attached.
ProteinListRun run_protein_list(ComponentSim& sim, std::string_view text,
                                const CostModel& model = {}, std::ostream* trace = nullptr);

inline constexpr std::string_view kTraceHeader =
    "position,input_byte,state_before,state_after,result_count,cycles";

}  // namespace pepscan::hw
