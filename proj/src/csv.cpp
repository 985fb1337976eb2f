#include "warpspec/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "warpspec/error.hpp"

namespace warpspec::csv {
namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ConfigParseError, "cannot write " + path.string());
  out << text;
}

bool parse_row(const std::string& line, std::vector<double>& row) {
  row.clear();
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    if (b == std::string::npos) return false;
    double v = 0.0;
    const char* first = cell.data() + b;
    const char* last = cell.data() + e + 1;
    if (*first == '+') ++first;
    const auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last) return false;
    row.push_back(v);
  }
  return !row.empty();
}

}  // namespace

std::string format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_columns(const std::filesystem::path& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns) {
  std::string s;
  for (std::size_t c = 0; c < header.size(); ++c) s += (c ? "," : "") + header[c];
  s += '\n';
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  for (const auto& col : columns)
    if (col.size() != n) throw Error(ErrorCode::GridMismatch, "CSV columns differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < columns.size(); ++c) s += (c ? "," : "") + format(columns[c][i]);
    s += '\n';
  }
  write_text(path, s);
}

void write_complex_series(const std::filesystem::path& path, const std::string& axis, std::span<const double> x,
                          std::span<const cplx> values) {
  if (x.size() != values.size()) throw Error(ErrorCode::GridMismatch, "axis and values differ in length");
  std::vector<double> re(values.size()), im(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    re[i] = values[i].real();
    im[i] = values[i].imag();
  }
  write_columns(path, {axis, "re", "im"}, {std::vector<double>(x.begin(), x.end()), re, im});
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

Table& Table::row() {
  rows_.emplace_back();
  return *this;
}

Table& Table::cell(const std::string& text) {
  rows_.back().push_back(text);
  return *this;
}

Table& Table::cell(double value) { return cell(format(value)); }

Table& Table::cell(long long value) { return cell(std::to_string(value)); }

std::string Table::str() const {
  std::string s;
  for (std::size_t c = 0; c < header_.size(); ++c) s += (c ? "," : "") + header_[c];
  s += '\n';
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) s += (c ? "," : "") + r[c];
    s += '\n';
  }
  return s;
}

void Table::write(const std::filesystem::path& path) const { write_text(path, str()); }

std::vector<std::vector<double>> read_numeric(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParseError, "cannot read " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::vector<double> row;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    if (!parse_row(line, row)) {
      if (first) {
        first = false;
        continue;
      }
      throw Error(ErrorCode::ConfigParseError, path.string() + ": malformed row '" + line + "'");
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorCode::ConfigParseError, path.string() + ": ragged row '" + line + "'");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace warpspec::csv
