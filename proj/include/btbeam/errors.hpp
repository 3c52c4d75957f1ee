#pragma once

#include <stdexcept>
#include <string>

namespace btbeam {

enum class ErrorCode {
  QTooSmall,
  NegativeCoefficient,
  BadGrid,
  BadTime,
  FileMismatch,
  BadMode,
  LengthMismatch,
  ConvergenceFailure,
  NonFiniteState,
  SubstepDiverged,
  EmptyRun,
  BallViolation,
  IdenticalStates,
  ZeroDamping,
  EmptySequence,
  TooShort,
  TooSparse,
  TooFewSamples,
  NonPositiveEnergy,
  ParamMismatch,
  InsufficientGrids,
  ParseError,
  UnknownKey,
  ValidationError,
  IoError,
};

const char* to_string(ErrorCode code);

/// Structured error carrying one of the codes above plus a human-readable
/// message naming the offending field or value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace btbeam
