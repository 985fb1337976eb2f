#pragma once

#include <span>
#include <string>
#include <vector>

#include "warpspec/report.hpp"

namespace warpspec {

struct ConvergenceRow {
  double parameter;
  double error;
};

struct ConvergenceTable {
  std::string parameter_name;
  std::string quantity;
  std::vector<ConvergenceRow> rows;
  double slope = 0.0;
  /// "parameter,error" rows followed by a "# slope,<value>" trailer.
  std::string csv() const;
};

/// Fits the log-log slope of `quantity` (a scalar in each run's report) against each run's
/// refinement parameter. Throws InsufficientRuns for fewer than 3 runs, missing data, or
/// runs that do not differ in the refinement parameter.
ConvergenceTable emit_convergence_table(std::span<const Report> runs, const std::string& quantity);

/// Same, from bare (parameter, error) pairs.
ConvergenceTable convergence_table(const std::string& parameter_name, const std::string& quantity,
                                   std::vector<ConvergenceRow> rows);

}  // namespace warpspec
