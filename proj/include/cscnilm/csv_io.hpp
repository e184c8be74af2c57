#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace cscnilm {

/// Bad input data or configuration (CLI exit code 2).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written (CLI exit code 2).
class IoError : public DataError {
public:
  using DataError::DataError;
};

/// Shortest decimal form that reads back to the same double ("%.17g").
std::string format_double(double v);

/// Writes `index,value` with one row per sample, 0-based index.
void write_series(const std::filesystem::path& path, const std::vector<double>& values);

/// Reads a file written by write_series. Throws IoError / DataError.
std::vector<double> read_series(const std::filesystem::path& path);

/// Header row followed by equally long columns.
void write_columns(const std::filesystem::path& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns);

}  // namespace cscnilm
