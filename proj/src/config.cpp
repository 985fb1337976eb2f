#include "warpspec/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "warpspec/error.hpp"

namespace warpspec {
namespace {

using nlohmann::json;

class ValueParser {
 public:
  ValueParser(const std::string& s, int line) : s_(s), line_(line) {}

  json parse_whole() {
    json v = value();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters after value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(line_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  json value() {
    skip_ws();
    if (pos_ >= s_.size()) fail("missing value");
    const char c = s_[pos_];
    if (c == '"') return string_value();
    if (c == '[') return array_value();
    if (c == '{') return table_value();
    if (s_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      return true;
    }
    if (s_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      return false;
    }
    return number_value();
  }

  json string_value() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char c = s_[pos_++];
      if (c == '\\') {
        if (pos_ >= s_.size()) fail("unterminated escape");
        const char e = s_[pos_++];
        switch (e) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case '"': c = '"'; break;
          case '\\': c = '\\'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
      }
      out.push_back(c);
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  json array_value() {
    ++pos_;
    json arr = json::array();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return arr;
    }
    while (true) {
      arr.push_back(value());
      skip_ws();
      if (pos_ >= s_.size()) fail("unterminated array");
      if (s_[pos_] == ',') {
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          return arr;
        }
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return arr;
      }
      fail("expected ',' or ']' in array");
    }
  }

  json table_value() {
    ++pos_;
    json t = json::object();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '}') {
      ++pos_;
      return t;
    }
    while (true) {
      skip_ws();
      const std::string k = key();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' in inline table");
      ++pos_;
      t[k] = value();
      skip_ws();
      if (pos_ >= s_.size()) fail("unterminated inline table");
      if (s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (s_[pos_] == '}') {
        ++pos_;
        return t;
      }
      fail("expected ',' or '}' in inline table");
    }
  }

  std::string key() {
    if (pos_ < s_.size() && s_[pos_] == '"') return string_value().get<std::string>();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
      ++pos_;
    if (b == pos_) fail("expected a key");
    return s_.substr(b, pos_ - b);
  }

  json number_value() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                s_[pos_] == '+' || s_[pos_] == '-' || s_[pos_] == '_'))
      ++pos_;
    std::string tok = s_.substr(b, pos_ - b);
    std::erase(tok, '_');
    if (tok.empty()) fail("expected a value");
    const bool is_int = tok.find_first_of(".eE") == std::string::npos && tok != "inf" && tok != "nan";
    if (is_int) {
      long long v = 0;
      const char* first = tok.data() + (tok[0] == '+' ? 1 : 0);
      const auto [p, ec] = std::from_chars(first, tok.data() + tok.size(), v);
      if (ec == std::errc() && p == tok.data() + tok.size()) return v;
    }
    double d = 0.0;
    const char* first = tok.data() + (tok[0] == '+' ? 1 : 0);
    const auto [p, ec] = std::from_chars(first, tok.data() + tok.size(), d);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("cannot parse value '" + tok + "'");
    return d;
  }

  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Net bracket depth of a line, ignoring brackets inside strings and comments.
int bracket_balance(const std::string& s) {
  int depth = 0;
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_str) {
      if (c == '\\') ++i;
      else if (c == '"') in_str = false;
      continue;
    }
    if (c == '"') in_str = true;
    else if (c == '#') break;
    else if (c == '[' || c == '{') ++depth;
    else if (c == ']' || c == '}') --depth;
  }
  return depth;
}

json& section_node(json& root, const std::string& header, int line) {
  json* node = &root;
  std::stringstream ss(header);
  std::string part;
  while (std::getline(ss, part, '.')) {
    part = trim(part);
    if (part.empty()) throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(line) + ": empty section name");
    if (!node->is_object()) throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(line) + ": '" + part + "' is not a table");
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
  }
  return *node;
}

}  // namespace

nlohmann::json parse_config_text(const std::string& text) {
  json root = json::object();
  json* current = &root;
  std::stringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const int start_line = line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '[') {
      const auto close = line.find(']');
      if (close == std::string::npos)
        throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(line_no) + ": unterminated section header");
      current = &section_node(root, line.substr(1, close - 1), line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
    if (key.empty()) throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(line_no) + ": empty key");
    std::string value = line.substr(eq + 1);
    int depth = bracket_balance(value);
    while (depth > 0 && std::getline(in, raw)) {
      ++line_no;
      value += "\n" + raw;
      depth += bracket_balance(raw);
    }
    if (depth != 0)
      throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(start_line) + ": unbalanced brackets");
    if (current->contains(key))
      throw Error(ErrorCode::ConfigParseError, "line " + std::to_string(start_line) + ": duplicate key '" + key + "'");
    (*current)[key] = ValueParser(value, start_line).parse_whole();
  }
  return root;
}

nlohmann::json load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ConfigParseError, "cannot open config " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

ConfigView::ConfigView(const nlohmann::json& root, std::string prefix) : node_(root), prefix_(std::move(prefix)) {}

bool ConfigView::has(const std::string& key) const { return node_.is_object() && node_.contains(key); }

const nlohmann::json& ConfigView::get(const std::string& key) const { return node_.at(key); }

ConfigView ConfigView::section(const std::string& key) const {
  static const nlohmann::json empty = nlohmann::json::object();
  if (!has(key)) return ConfigView(empty, path(key));
  if (!get(key).is_object()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must be a table");
  return ConfigView(get(key), path(key));
}

double ConfigView::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

double ConfigView::number(const std::string& key) const {
  if (!has(key)) throw Error(ErrorCode::ConfigParseError, "missing required key '" + path(key) + "'");
  const auto& v = get(key);
  if (!v.is_number()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must be a number");
  return v.get<double>();
}

long long ConfigView::integer(const std::string& key, long long fallback) const {
  if (!has(key)) return fallback;
  const auto& v = get(key);
  if (!v.is_number_integer()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must be an integer");
  return v.get<long long>();
}

std::string ConfigView::string(const std::string& key, const std::string& fallback) const {
  if (!has(key)) return fallback;
  const auto& v = get(key);
  if (!v.is_string()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must be a string");
  return v.get<std::string>();
}

bool ConfigView::boolean(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto& v = get(key);
  if (!v.is_boolean()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must be true or false");
  return v.get<bool>();
}

std::vector<double> ConfigView::numbers(const std::string& key, std::vector<double> fallback) const {
  if (!has(key)) return fallback;
  const auto& v = get(key);
  if (!v.is_array()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw Error(ErrorCode::ConfigParseError, "'" + path(key) + "' must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace warpspec
