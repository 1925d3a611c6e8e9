#pragma once

#include <stdexcept>
#include <string>

namespace ifl {

enum class ErrorCode {
  ParseError,
  TupleOutOfRange,
  CapExceeded,
  InvalidPair,
  MissingRelation,
  UnboundVariable,
  IncompleteStrategy,
  NotKnowledgeMemory,
  NotPrenex,
  BssPresent,
  NotWinning,
  Irregular,
  NotSentence,
  SignatureMismatch,
  VerificationFailed,
};

const char* error_code_name(ErrorCode code);

/// All library failures are reported through this exception; the code is
/// stable and machine-mappable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::TupleOutOfRange: return "TUPLE_OUT_OF_RANGE";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::InvalidPair: return "INVALID_PAIR";
    case ErrorCode::MissingRelation: return "MISSING_RELATION";
    case ErrorCode::UnboundVariable: return "UNBOUND_VARIABLE";
    case ErrorCode::IncompleteStrategy: return "INCOMPLETE_STRATEGY";
    case ErrorCode::NotKnowledgeMemory: return "NOT_KM";
    case ErrorCode::NotPrenex: return "NOT_PRENEX";
    case ErrorCode::BssPresent: return "BSS_PRESENT";
    case ErrorCode::NotWinning: return "NOT_WINNING";
    case ErrorCode::Irregular: return "IRREGULAR";
    case ErrorCode::NotSentence: return "NOT_SENTENCE";
    case ErrorCode::SignatureMismatch: return "SIGNATURE_MISMATCH";
    case ErrorCode::VerificationFailed: return "VERIFICATION_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace ifl
