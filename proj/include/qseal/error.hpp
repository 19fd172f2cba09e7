#pragma once

#include <stdexcept>
#include <string>

namespace qseal {

enum class ErrorCode {
  kInvalidParams,
  kOracleCapExceeded,
  kPositionOutOfRange,
  kRTooLarge,
  kCredentialBudgetExceeded,
  kCredentialUnknown,
  kInvalidShape,
  kNotAFullRead,
  kKeyLengthMismatch,
  kPayloadCapExceeded,
  kCSealReadFailure,
  kKSealReadFailure,
  kTieEncountered,
  kFileFormat,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` lets callers
// (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qseal
