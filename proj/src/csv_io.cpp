#include "cscnilm/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cscnilm {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write " + path.string());
  return out;
}

double parse_number(const std::string& text, const std::filesystem::path& path,
                    std::size_t line) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw DataError(path.string() + ":" + std::to_string(line) + ": bad number '" + text + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  // shortest text that reads back to the same bits
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_series(const std::filesystem::path& path, const std::vector<double>& values) {
  auto out = open_for_write(path);
  out << "index,value\n";
  for (std::size_t j = 0; j < values.size(); ++j)
    out << j << ',' << format_double(values[j]) << '\n';
  if (!out)
    throw IoError("write failed: " + path.string());
}

std::vector<double> read_series(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw DataError(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  if (line != "index,value")
    throw DataError(path.string() + ": expected header 'index,value'");

  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": missing comma");
    const double index = parse_number(line.substr(0, comma), path, lineno);
    if (index != static_cast<double>(values.size()))
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": index out of sequence");
    values.push_back(parse_number(line.substr(comma + 1), path, lineno));
  }
  return values;
}

void write_columns(const std::filesystem::path& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw DataError("write_columns: header and column count differ");
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != rows)
      throw DataError("write_columns: ragged columns");
  }
  auto out = open_for_write(path);
  for (std::size_t k = 0; k < header.size(); ++k)
    out << (k ? "," : "") << header[k];
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k)
      out << (k ? "," : "") << format_double(columns[k][r]);
    out << '\n';
  }
  if (!out)
    throw IoError("write failed: " + path.string());
}

}  // namespace cscnilm
