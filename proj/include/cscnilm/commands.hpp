#pragma once

#include <iosfwd>

#include "cscnilm/run_config.hpp"

namespace cscnilm {

enum ExitCode : int { kExitOk = 0, kExitDataError = 2, kExitDivergence = 3 };

/// Writes aggregate.csv, truth_<device>.csv, truth_active.csv and
/// truth_passive.csv into config.data_dir.
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Reads data_dir/aggregate.csv and writes pred_channel_<i>.csv,
/// pred_active.csv, pred_passive.csv, atoms.csv and convergence.csv into
/// config.output_dir.
int cmd_disaggregate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Scores the predictions in output_dir against the truths in data_dir,
/// writes output_dir/report.csv and prints the table.
int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `<tool> generate|disaggregate|evaluate|print-config
/// --config <path> [--seed n] [--radius n]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cscnilm
