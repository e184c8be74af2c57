#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "cscnilm/datagen.hpp"
#include "cscnilm/metrics.hpp"
#include "cscnilm/signal_model.hpp"

namespace cscnilm {

enum class ExperimentMode { activity, multichannel };

/// Everything a pipeline run needs, loaded from a flat `key = value` file.
///
/// `seed` drives both the household generator and the solver
/// initialization; `solver.seed` and `household.seed` mirror it.
struct RunConfig {
  SolverConfig solver;
  Household household = default_household();
  std::uint64_t seed = 1;
  ExperimentMode mode = ExperimentMode::activity;
  std::size_t radius = kDefaultActivityRadius;
  double threshold_fraction = kDefaultThresholdFraction;
  std::filesystem::path data_dir = "data";
  std::filesystem::path output_dir = "out";

  void set_seed(std::uint64_t s);
  /// Throws DataError on the first invalid field.
  void validate() const;
};

/// Parses config text. Unknown keys, malformed values and invalid
/// combinations raise DataError with the offending line number.
RunConfig parse_run_config(const std::string& text);

RunConfig load_run_config(const std::filesystem::path& path);

/// Config text that parse_run_config reads back to the same values.
std::string format_run_config(const RunConfig& config);

}  // namespace cscnilm
