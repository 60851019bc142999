#include "susypt/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace susypt::csv {

std::vector<double> Table::column(std::string_view name) const {
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] != name) continue;
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.at(j));
    return out;
  }
  throw std::out_of_range("csv: no column named " + std::string(name));
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '+')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("csv: not a number: '" + std::string(text) + "'");
  return v;
}

void write(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.header.size(); ++j) os << (j ? "," : "") << t.header[j];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << format_number(r[j]);
    os << '\n';
  }
}

void write_file(const std::filesystem::path& path, const Table& t) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("csv: cannot open " + path.string() + " for writing");
  write(os, t);
  if (!os) throw std::runtime_error("csv: write failed for " + path.string());
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Table read(std::istream& is) {
  Table t;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  for (auto f : split(line)) t.header.emplace_back(f);
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    for (auto f : split(line)) row.push_back(parse_number(f));
    if (row.size() != t.header.size())
      throw std::invalid_argument("csv: row width does not match header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("csv: cannot open " + path.string());
  return read(is);
}

}  // namespace susypt::csv
