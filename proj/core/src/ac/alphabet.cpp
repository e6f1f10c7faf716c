#include "pepscan/ac/alphabet.hpp"

#include "pepscan/error.hpp"

namespace pepscan::ac {

Alphabet::Alphabet() : Alphabet(kUppercase, kDefaultSentinel) {}

Alphabet::Alphabet(std::string_view symbols, unsigned char sentinel)
    : symbols_(symbols), sentinel_(sentinel) {
  if (symbols_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet has no symbols");
  }
  column_.fill(kNoColumn);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto byte = static_cast<unsigned char>(symbols_[i]);
    if (byte == sentinel_) {
      throw Error(ErrorCode::kSentinelInAlphabet,
                  "sentinel " + describe_byte(sentinel_) + " is also an alphabet symbol");
    }
    if (column_[byte] != kNoColumn) {
      throw Error(ErrorCode::kInvalidArgument, "repeated alphabet symbol " + describe_byte(byte));
    }
    column_[byte] = static_cast<std::int16_t>(i);
  }
  column_[sentinel_] = static_cast<std::int16_t>(symbols_.size());
}

}  // namespace pepscan::ac
