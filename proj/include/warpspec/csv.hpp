#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "warpspec/grid.hpp"

namespace warpspec::csv {

/// Full-precision ("%.17g") formatting so artifacts round-trip and compare byte for byte.
std::string format(double x);

/// Writes a header line then one row per entry of `columns[0]`; all columns must share a length.
void write_columns(const std::filesystem::path& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns);

/// (x, re, im) rows, e.g. a time signal (t, Re, Im) or a spectrum (E, Re, Im).
void write_complex_series(const std::filesystem::path& path, const std::string& axis, std::span<const double> x,
                          std::span<const cplx> values);

/// Incremental writer for tables with mixed text and numeric cells.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  Table& row();
  Table& cell(const std::string& text);
  Table& cell(double value);
  Table& cell(long long value);
  void write(const std::filesystem::path& path) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Reads a numeric CSV; a first line that does not parse as numbers is treated as a header.
/// Throws ConfigParseError on unreadable files or ragged rows.
std::vector<std::vector<double>> read_numeric(const std::filesystem::path& path);

}  // namespace warpspec::csv
