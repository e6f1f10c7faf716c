#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pepscan {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidSymbol,
  kEmptyPattern,
  kInvalidAddress,
  kWriteToReadOnly,
  kMissingWorkProfile,
  kTooManyStates,
  kInvalidIdentifier,
  kSchemaError,
  kInconsistentTable,
  kNoRecords,
  kInvalidResidue,
  kEmptySequence,
  kUnsupportedEnzyme,
  kSentinelInAlphabet,
  kEmptyCorpus,
  kSingularFit,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `position()` carries the offending
// index when one exists (pattern index, text offset, register address...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

// Formats a byte for diagnostics: printable ASCII as 'c', others as 0xNN.
std::string describe_byte(unsigned char byte);

}  // namespace pepscan
