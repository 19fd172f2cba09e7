#include "qseal/error.hpp"

namespace qseal {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kOracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kRTooLarge: return "RTooLarge";
    case ErrorCode::kCredentialBudgetExceeded: return "CredentialBudgetExceeded";
    case ErrorCode::kCredentialUnknown: return "CredentialUnknown";
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kNotAFullRead: return "NotAFullRead";
    case ErrorCode::kKeyLengthMismatch: return "KeyLengthMismatch";
    case ErrorCode::kPayloadCapExceeded: return "PayloadCapExceeded";
    case ErrorCode::kCSealReadFailure: return "CSealReadFailure";
    case ErrorCode::kKSealReadFailure: return "KSealReadFailure";
    case ErrorCode::kTieEncountered: return "TieEncountered";
    case ErrorCode::kFileFormat: return "FileFormat";
  }
  return "Unknown";
}

}  // namespace qseal
