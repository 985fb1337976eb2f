#include "warpspec/report.hpp"

#include <cmath>
#include <fstream>

#include "warpspec/error.hpp"

namespace warpspec {

Report::Report(std::string subcommand) : subcommand_(std::move(subcommand)) {}

void Report::add_scalar(const std::string& name, double value) {
  scalars_[name] = std::isfinite(value) ? nlohmann::json(value) : nlohmann::json(std::to_string(value));
}

void Report::add_scalar(const std::string& name, nlohmann::json value) { scalars_[name] = std::move(value); }

bool Report::add_check(const std::string& name, double value, double tolerance, Comparison cmp) {
  const bool pass = std::isfinite(value) && (cmp == Comparison::less ? value < tolerance : value > tolerance);
  nlohmann::json c{{"name", name},
                   {"value", std::isfinite(value) ? nlohmann::json(value) : nlohmann::json(std::to_string(value))},
                   {"tolerance", tolerance},
                   {"comparison", cmp == Comparison::less ? "<" : ">"},
                   {"pass", pass}};
  checks_.push_back(std::move(c));
  return pass;
}

bool Report::add_check(const std::string& name, nlohmann::json value, nlohmann::json tolerance, bool pass) {
  checks_.push_back({{"name", name}, {"value", std::move(value)}, {"tolerance", std::move(tolerance)}, {"pass", pass}});
  return pass;
}

void Report::set_refinement(const std::string& name, double value) {
  refinement_ = {{"name", name}, {"value", value}};
}

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c["pass"].get<bool>()) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j{{"schema_version", kSchemaVersion},
                   {"subcommand", subcommand_},
                   {"inputs", inputs_},
                   {"scalars", scalars_},
                   {"checks", checks_},
                   {"pass", all_pass()},
                   {"wall_time_s", wall_time_},
                   {"artifacts", artifacts_}};
  if (!refinement_.is_null()) j["refinement"] = refinement_;
  if (!notes_.empty()) j["notes"] = notes_;
  return j;
}

void Report::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ConfigParseError, "cannot write report to " + path);
  out << to_json().dump(2) << '\n';
}

}  // namespace warpspec
