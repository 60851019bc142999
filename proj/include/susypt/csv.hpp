#pragma once

// Flat CSV tables: one header line, then rows of numbers. Numbers are
// written in locale-independent scientific notation with 17 significant
// digits, which round-trips every double exactly.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace susypt::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Values of one column, by header name. Throws std::out_of_range.
  std::vector<double> column(std::string_view name) const;
};

std::string format_number(double v);

/// Throws std::invalid_argument on malformed text.
double parse_number(std::string_view text);

void write(std::ostream& os, const Table& t);
void write_file(const std::filesystem::path& path, const Table& t);

Table read(std::istream& is);
Table read_file(const std::filesystem::path& path);

}  // namespace susypt::csv
