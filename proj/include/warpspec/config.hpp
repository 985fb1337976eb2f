#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

namespace warpspec {

/// Parses the TOML subset used by experiment configs: [section] and [a.b] headers,
/// key = value with strings, numbers, booleans, arrays (may span lines) and inline tables.
/// Throws ConfigParseError with the line number on malformed input.
nlohmann::json parse_config_text(const std::string& text);
nlohmann::json load_config(const std::filesystem::path& path);

/// Typed lookups into a parsed config; missing keys fall back to `fallback`, wrong types throw
/// ConfigParseError naming the dotted key.
class ConfigView {
 public:
  ConfigView(const nlohmann::json& root, std::string prefix = "");

  bool has(const std::string& key) const;
  ConfigView section(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  double number(const std::string& key) const;
  long long integer(const std::string& key, long long fallback) const;
  std::string string(const std::string& key, const std::string& fallback) const;
  bool boolean(const std::string& key, bool fallback) const;
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) const;
  const nlohmann::json& raw() const { return node_; }
  std::string path(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

 private:
  const nlohmann::json& get(const std::string& key) const;
  const nlohmann::json& node_;
  std::string prefix_;
};

}  // namespace warpspec
