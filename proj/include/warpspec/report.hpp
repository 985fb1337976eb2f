#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace warpspec {

enum class Comparison { less, greater };

/// Machine-readable run report: inputs, named checks with tolerances and verdicts, scalars,
/// wall time, artifacts. Serialized as JSON with a schema version.
class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit Report(std::string subcommand);

  void set_inputs(nlohmann::json inputs) { inputs_ = std::move(inputs); }
  void add_scalar(const std::string& name, double value);
  void add_scalar(const std::string& name, nlohmann::json value);
  /// Records value against tolerance; returns the verdict.
  bool add_check(const std::string& name, double value, double tolerance, Comparison cmp = Comparison::less);
  /// Check whose verdict is computed by the caller (value reported as-is).
  bool add_check(const std::string& name, nlohmann::json value, nlohmann::json tolerance, bool pass);
  void add_artifact(const std::string& path) { artifacts_.push_back(path); }
  void add_note(const std::string& note) { notes_.push_back(note); }
  void set_refinement(const std::string& name, double value);
  void set_wall_time(double seconds) { wall_time_ = seconds; }

  bool all_pass() const;
  std::size_t check_count() const { return checks_.size(); }
  const nlohmann::json& checks() const { return checks_; }
  const nlohmann::json& scalars() const { return scalars_; }
  nlohmann::json to_json() const;
  void write(const std::string& path) const;

 private:
  std::string subcommand_;
  nlohmann::json inputs_ = nlohmann::json::object();
  nlohmann::json scalars_ = nlohmann::json::object();
  nlohmann::json checks_ = nlohmann::json::array();
  nlohmann::json refinement_;
  std::vector<std::string> artifacts_;
  std::vector<std::string> notes_;
  double wall_time_ = 0.0;
};

}  // namespace warpspec
