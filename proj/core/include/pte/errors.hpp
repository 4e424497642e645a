// Error taxonomy.  Every throwing operation raises pte::Error with a code
// from the fixed list below; the CLI maps codes to process exit codes
// (input/usage problems -> 2, domain failures -> 3).
#pragma once

#include <stdexcept>
#include <string>

namespace pte {

enum class ErrorCode {
  ParseError,
  SideCardinalityMismatch,
  ZeroScale,
  DegenerateSolution,
  NonPositiveCount,
  UnsupportedExponent,
  CardinalityMismatch,
  DegenerateParameters,
  DenominatorVanishes,
  NoCancellation,
  NotIdeal,
  ExceptionalPoint,
  Degenerate,
  AscentStuck,
  IdentityFails,
  ExponentOverflow,
  BoundTooLarge,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  // Process exit code the CLI uses for this error class.
  int exit_code() const noexcept;

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace pte
