#include "pepscan/error.hpp"

#include <cstdio>

namespace pepscan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidSymbol: return "InvalidSymbol";
    case ErrorCode::kEmptyPattern: return "EmptyPattern";
    case ErrorCode::kInvalidAddress: return "InvalidAddress";
    case ErrorCode::kWriteToReadOnly: return "WriteToReadOnly";
    case ErrorCode::kMissingWorkProfile: return "MissingWorkProfile";
    case ErrorCode::kTooManyStates: return "TooManyStates";
    case ErrorCode::kInvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInconsistentTable: return "InconsistentTable";
    case ErrorCode::kNoRecords: return "NoRecords";
    case ErrorCode::kInvalidResidue: return "InvalidResidue";
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kUnsupportedEnzyme: return "UnsupportedEnzyme";
    case ErrorCode::kSentinelInAlphabet: return "SentinelInAlphabet";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kSingularFit: return "SingularFit";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

std::string describe_byte(unsigned char byte) {
  char buf[8];
  if (byte >= 0x20 && byte < 0x7f) {
    std::snprintf(buf, sizeof buf, "'%c'", byte);
  } else {
    std::snprintf(buf, sizeof buf, "0x%02X", byte);
  }
  return buf;
}

}  // namespace pepscan
