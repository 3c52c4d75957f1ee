#include "btbeam/errors.hpp"

namespace btbeam {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::QTooSmall: return "QTooSmall";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::BadGrid: return "BadGrid";
    case ErrorCode::BadTime: return "BadTime";
    case ErrorCode::FileMismatch: return "FileMismatch";
    case ErrorCode::BadMode: return "BadMode";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::SubstepDiverged: return "SubstepDiverged";
    case ErrorCode::EmptyRun: return "EmptyRun";
    case ErrorCode::BallViolation: return "BallViolation";
    case ErrorCode::IdenticalStates: return "IdenticalStates";
    case ErrorCode::ZeroDamping: return "ZeroDamping";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::TooSparse: return "TooSparse";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NonPositiveEnergy: return "NonPositiveEnergy";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::InsufficientGrids: return "InsufficientGrids";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace btbeam
