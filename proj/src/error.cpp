#include "warpspec/error.hpp"

namespace warpspec {

std::string_view qualified_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGrid: return "grid.InvalidGrid";
    case ErrorCode::GridMismatch: return "transforms.GridMismatch";
    case ErrorCode::GridTooCoarse: return "numerics.GridTooCoarse";
    case ErrorCode::OutOfDomain: return "warp.OutOfDomain";
    case ErrorCode::UnknownFamily: return "warp.UnknownFamily";
    case ErrorCode::NonMonotoneParameters: return "warp.NonMonotoneParameters";
    case ErrorCode::NonPositiveG: return "warp.NonPositiveG";
    case ErrorCode::NonMonotoneWarp: return "transforms.NonMonotoneWarp";
    case ErrorCode::ResampleOutOfRange: return "transforms.ResampleOutOfRange";
    case ErrorCode::NyquistViolation: return "distributions.NyquistViolation";
    case ErrorCode::RangeTooNarrow: return "distributions.RangeTooNarrow";
    case ErrorCode::BadPotential: return "schrodinger.BadPotential";
    case ErrorCode::ConvergenceFailure: return "schrodinger.ConvergenceFailure";
    case ErrorCode::LinearSolveFailure: return "schrodinger.LinearSolveFailure";
    case ErrorCode::ConfigParseError: return "cli.ConfigParseError";
    case ErrorCode::InsufficientRuns: return "cli.InsufficientRuns";
  }
  return "unknown";
}

}  // namespace warpspec
