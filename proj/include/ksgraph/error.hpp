#pragma once

#include <stdexcept>
#include <string>

namespace ksg {

enum class ErrorCode {
  // graph / tree input
  DuplicateId,
  UnknownEndpoint,
  Disconnected,
  WrongCardinality,
  ContainsCycle,
  NotSpanning,
  ContainsSelfLoop,
  TooLarge,
  NotAChord,
  NotACochord,
  NotSimple,
  // linear algebra
  NotSquare,
  Singular,
  NonInteger,
  NoConvergence,
  DimensionMismatch,
  // embeddings
  BadRotation,
  EulerViolation,
  NonSpanningCotree,
  // misc
  GenerationFailed,
  InvalidArgument,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ksg
