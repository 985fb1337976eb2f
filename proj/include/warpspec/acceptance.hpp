#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "warpspec/report.hpp"

namespace warpspec {

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "suite-out";
  /// Time-grid size for the transform criteria.
  std::size_t n = 4096;
  /// u-grid oversampling for the warped transform: n_u = oversample * (n - 1) + 1.
  std::size_t oversample = 8;
  /// Re-run the battery into a scratch directory and compare CSV bytes (criterion 10).
  bool determinism = true;
  /// Called after each criterion completes.
  std::function<void(int, const std::string&, bool, const std::string&)> on_result;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceResult {
  std::vector<CriterionResult> criteria;
  Report report{"suite"};
  std::vector<std::filesystem::path> artifacts;
  bool all_pass() const;
};

/// Runs the ten acceptance criteria, writing one CSV per criterion plus summary.csv into
/// out_dir and returning the verdicts. Library errors inside a criterion fail that criterion.
AcceptanceResult run_acceptance(const AcceptanceOptions& opts);

/// Line printed per criterion: "PASS  C<id> <name>: <detail>".
std::string format_criterion(const CriterionResult& r);

}  // namespace warpspec
