#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace warpspec {

enum class ErrorCode {
  // grid / generic
  InvalidGrid,
  GridMismatch,
  GridTooCoarse,
  OutOfDomain,
  // warp
  UnknownFamily,
  NonMonotoneParameters,
  NonPositiveG,
  NonMonotoneWarp,
  // transforms
  ResampleOutOfRange,
  // distributions
  NyquistViolation,
  RangeTooNarrow,
  // schrodinger
  BadPotential,
  ConvergenceFailure,
  LinearSolveFailure,
  // cli
  ConfigParseError,
  InsufficientRuns,
};

/// Module-qualified name, e.g. "warp.NonMonotoneParameters".
std::string_view qualified_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(qualified_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace warpspec
