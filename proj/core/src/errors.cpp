#include "pte/errors.hpp"

namespace pte {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SideCardinalityMismatch: return "SideCardinalityMismatch";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DegenerateSolution: return "DegenerateSolution";
    case ErrorCode::NonPositiveCount: return "NonPositiveCount";
    case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::NoCancellation: return "NoCancellation";
    case ErrorCode::NotIdeal: return "NotIdeal";
    case ErrorCode::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::AscentStuck: return "AscentStuck";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code) {}

int Error::exit_code() const noexcept {
  switch (code_) {
    // A disproved identity is a verification failure, not a usage problem.
    case ErrorCode::IdentityFails:
      return 1;
    // Malformed input / misuse of an interface.
    case ErrorCode::ParseError:
    case ErrorCode::SideCardinalityMismatch:
    case ErrorCode::CardinalityMismatch:
      return 2;
    // Everything else is a domain failure on well-formed input.
    default:
      return 3;
  }
}

void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace pte
