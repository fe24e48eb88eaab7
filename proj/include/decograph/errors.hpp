#pragma once

#include <stdexcept>
#include <string>

namespace decograph {

// Stable error codes surfaced through the CLI as machine-readable JSON.
enum class ErrorCode {
  // input validation
  InvalidRank,
  LetterOutOfRange,
  WrongLength,
  NotLongestElement,
  NoNextOccurrence,
  SlotMismatch,
  ParseError,
  NotMinusculeNotAdapted,
  NotMinuscule,
  EmptyPolynomial,
  IncompleteCover,
  DimensionMismatch,
  HighestWeightViolation,
  BadJobSpec,
  // algorithm failures on out-of-scope input
  NonTermination,
  StuckSink,
  CapExceeded,
  // internal consistency failures (bugs if they ever fire)
  NotFound,
  InternalInconsistency,
  MultiplicityViolation,
  NonMinusculeCoefficients,
};

const char* error_code_name(ErrorCode code);

// CLI exit class: 2 = validation error, 3 = algorithm / internal error.
// Exit 4 (verification mismatch) is produced by the verify commands directly,
// not by thrown errors.
int error_exit_class(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace decograph
