#include "warpspec/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "warpspec/error.hpp"
#include "warpspec/numerics.hpp"

namespace warpspec {

std::string ConvergenceTable::csv() const {
  std::string s = parameter_name + "," + quantity + "\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.parameter, r.error);
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "# slope,%.17g\n", slope);
  return s + buf;
}

ConvergenceTable convergence_table(const std::string& parameter_name, const std::string& quantity,
                                   std::vector<ConvergenceRow> rows) {
  if (rows.size() < 3) throw Error(ErrorCode::InsufficientRuns, "convergence table needs at least 3 runs");
  std::vector<double> p, e;
  for (const auto& r : rows) {
    if (!(r.parameter > 0.0) || !(r.error > 0.0) || !std::isfinite(r.error))
      throw Error(ErrorCode::InsufficientRuns, "convergence rows need positive parameters and errors");
    p.push_back(r.parameter);
    e.push_back(r.error);
  }
  std::sort(p.begin(), p.end());
  if (std::unique(p.begin(), p.end()) - p.begin() < 2)
    throw Error(ErrorCode::InsufficientRuns, "runs do not differ in the refinement parameter");
  p.clear();
  for (const auto& r : rows) p.push_back(r.parameter);
  ConvergenceTable t{parameter_name, quantity, std::move(rows)};
  t.slope = numerics::loglog_slope(p, e);
  return t;
}

ConvergenceTable emit_convergence_table(std::span<const Report> runs, const std::string& quantity) {
  std::vector<ConvergenceRow> rows;
  std::string name;
  for (const auto& r : runs) {
    const auto j = r.to_json();
    if (!j.contains("refinement") || !j["scalars"].contains(quantity))
      throw Error(ErrorCode::InsufficientRuns, "run lacks a refinement parameter or the scalar '" + quantity + "'");
    name = j["refinement"]["name"].get<std::string>();
    rows.push_back({j["refinement"]["value"].get<double>(), j["scalars"][quantity].get<double>()});
  }
  return convergence_table(name, quantity, std::move(rows));
}

}  // namespace warpspec
