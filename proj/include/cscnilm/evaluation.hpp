#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cscnilm {

struct ChannelScore {
  std::string name;
  double mcc_r = 0.0;
  double mse = 0.0;
  /// Ground truth identically zero: the threshold collapses to 0 and the
  /// MCC is meaningless.
  bool degenerate = false;
};

struct EvaluationReport {
  std::size_t radius = 7;
  std::vector<ChannelScore> channels;

  const ChannelScore* find(const std::string& name) const;
};

struct NamedSeries {
  std::string name;
  std::vector<double> values;
};

/// Both series are divided by `scale` before scoring.
ChannelScore score_channel(const std::string& name, const std::vector<double>& pred,
                           const std::vector<double>& truth, double scale, std::size_t radius,
                           double threshold_fraction);

/// Scores "active" and "passive" predictions against their truths.
EvaluationReport evaluate_activity(const std::vector<double>& pred_active,
                                   const std::vector<double>& pred_passive,
                                   const std::vector<double>& truth_active,
                                   const std::vector<double>& truth_passive, double scale,
                                   std::size_t radius, double threshold_fraction);

/// Assigns every device a distinct predicted channel so that the summed MSE
/// is minimal (exhaustive search), then scores each pair. Needs at least
/// as many channels as devices.
EvaluationReport evaluate_multichannel(const std::vector<std::vector<double>>& channels,
                                       const std::vector<NamedSeries>& devices, double scale,
                                       std::size_t radius, double threshold_fraction);

/// Device index -> channel index minimizing the sum of cost[d][assigned[d]].
std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost);

/// channel,mcc_r,mse_e4,degenerate
void write_report_csv(const std::filesystem::path& path, const EvaluationReport& report);

/// Fixed-width table, MSE scaled by 1e4.
std::string format_report(const EvaluationReport& report);

}  // namespace cscnilm
