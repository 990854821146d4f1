#include "ksgraph/error.hpp"

namespace ksg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::ContainsCycle: return "ContainsCycle";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::ContainsSelfLoop: return "ContainsSelfLoop";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAChord: return "NotAChord";
    case ErrorCode::NotACochord: return "NotACochord";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NonInteger: return "NonInteger";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadRotation: return "BadRotation";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::NonSpanningCotree: return "NonSpanningCotree";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ksg
