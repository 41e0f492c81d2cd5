#pragma once

#include <stdexcept>
#include <string>

namespace gcg {

enum class ErrorCode {
  DimensionMismatch = 1,
  NonFiniteValue,
  InvalidArgument,
  InfeasibleQueryPoint,
  StartPointInfeasible,
  LinesearchStalled,
  DegenerateDirection,
  NegativeGap,
  NonConvexFixture,
  DimensionTooLarge,
  InsufficientTrace,
  InvariantViolation,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

/// All failures in this library are thrown as Error; the code survives the
/// trip through the C API as a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gcg
