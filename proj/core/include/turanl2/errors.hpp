#pragma once

#include <stdexcept>
#include <string>

namespace turanl2 {

enum class ErrorCode {
  DegenerateEdge,
  VertexOutOfRange,
  SizeLimitExceeded,
  TooFewVertices,
  SameVertex,
  CrossPartClasses,
  SameClass,
  NotLocallySymmetrized,
  MalformedPath,
  PartitionMismatch,
  UnknownFamily,
  EdgeNotInternal,
  EdgeNotCrossing,
  EdgeNotInShadow,
  EdgePhaseMismatch,
  ParseError,
  InvalidArgument,
};

const char* errorName(ErrorCode code);

class TuranError : public std::runtime_error {
 public:
  TuranError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace turanl2
