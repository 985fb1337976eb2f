#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "warpspec/config.hpp"
#include "warpspec/error.hpp"
#include "warpspec/report.hpp"
#include "warpspec/warp.hpp"

namespace warpspec::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kConfigError = 2, kNumericFailure = 3 };

struct RunOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;
};

struct RunResult {
  int exit_code = kPass;
  Report report{""};
  std::string message;
};

/// Subcommands: transform, verify-biorth, distribution, evolve, orthogonality, suite.
/// Writes <out_dir>/report.json (also on check failure) plus the subcommand's CSV artifacts.
/// Progress and the summary go to `log`.
RunResult run(const std::string& subcommand, const RunOptions& opts, std::ostream& log);

/// Exit code for a library error: configuration-shaped problems map to 2, numeric ones to 3.
int exit_code_for(ErrorCode code);

/// Warp from `{ family = "...", params = [...], t0 = 0, c0 = 0 }` or `{ file = "t_g.csv" }`
/// (file paths are relative to `base`).
Warp warp_from_config(const ConfigView& node, const std::filesystem::path& base);

}  // namespace warpspec::cli
