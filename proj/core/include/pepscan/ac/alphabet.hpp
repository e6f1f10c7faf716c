#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace pepscan::ac {

// Symbols a pattern may contain plus one out-of-band sentinel byte. The
// dense transition table has one column per symbol and a final column for
// the sentinel.
class Alphabet {
 public:
  static constexpr unsigned char kDefaultSentinel = '#';
  static constexpr std::string_view kUppercase = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static constexpr int kNoColumn = -1;

  // A-Z with '#' as sentinel.
  Alphabet();
  // Throws Error(kSentinelInAlphabet) if the sentinel is one of the symbols,
  // kInvalidArgument on empty or repeated symbols.
  Alphabet(std::string_view symbols, unsigned char sentinel);

  bool allows(unsigned char byte) const noexcept { return column_[byte] >= 0 && byte != sentinel_; }
  bool is_sentinel(unsigned char byte) const noexcept { return byte == sentinel_; }

  // Column index for a symbol or the sentinel, kNoColumn otherwise.
  int column(unsigned char byte) const noexcept { return column_[byte]; }

  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  std::size_t column_count() const noexcept { return symbols_.size() + 1; }
  std::size_t sentinel_column() const noexcept { return symbols_.size(); }

  const std::string& symbols() const noexcept { return symbols_; }
  unsigned char sentinel() const noexcept { return sentinel_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ && a.sentinel_ == b.sentinel_;
  }

 private:
  std::string symbols_;
  unsigned char sentinel_;
  std::array<std::int16_t, 256> column_{};
};

}  // namespace pepscan::ac
