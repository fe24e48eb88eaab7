#include "decograph/errors.hpp"

namespace decograph {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NotLongestElement: return "NotLongestElement";
    case ErrorCode::NoNextOccurrence: return "NoNextOccurrence";
    case ErrorCode::SlotMismatch: return "SlotMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMinusculeNotAdapted: return "NotMinusculeNotAdapted";
    case ErrorCode::NotMinuscule: return "NotMinuscule";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::HighestWeightViolation: return "HighestWeightViolation";
    case ErrorCode::BadJobSpec: return "BadJobSpec";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::StuckSink: return "StuckSink";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::MultiplicityViolation: return "MultiplicityViolation";
    case ErrorCode::NonMinusculeCoefficients: return "NonMinusculeCoefficients";
  }
  return "UnknownError";
}

int error_exit_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonTermination:
    case ErrorCode::StuckSink:
    case ErrorCode::CapExceeded:
    case ErrorCode::NotFound:
    case ErrorCode::InternalInconsistency:
    case ErrorCode::MultiplicityViolation:
    case ErrorCode::NonMinusculeCoefficients:
      return 3;
    default:
      return 2;
  }
}

}  // namespace decograph
