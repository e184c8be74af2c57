#include "cscnilm/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "cscnilm/csv_io.hpp"
#include "cscnilm/metrics.hpp"

namespace cscnilm {

namespace {

std::vector<double> scaled(const std::vector<double>& x, double scale) {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    out[j] = x[j] / scale;
  return out;
}

void require_same_length(const std::vector<double>& a, const std::vector<double>& b,
                         const std::string& name) {
  if (a.size() != b.size())
    throw DataError(name + ": prediction has " + std::to_string(a.size()) +
                    " samples, truth has " + std::to_string(b.size()));
}

}  // namespace

const ChannelScore* EvaluationReport::find(const std::string& name) const {
  for (const auto& c : channels) {
    if (c.name == name)
      return &c;
  }
  return nullptr;
}

ChannelScore score_channel(const std::string& name, const std::vector<double>& pred,
                           const std::vector<double>& truth, double scale, std::size_t radius,
                           double threshold_fraction) {
  require_same_length(pred, truth, name);
  if (!(scale > 0.0))
    throw DataError("normalization scale must be positive");
  const auto p = scaled(pred, scale);
  const auto t = scaled(truth, scale);
  ChannelScore s;
  s.name = name;
  s.degenerate = std::all_of(t.begin(), t.end(), [](double v) { return v == 0.0; });
  const auto [truth_bits, pred_bits] = binarize(p, t, threshold_fraction);
  s.mcc_r = mcc_r(truth_bits, pred_bits, radius);
  s.mse = mse(p, t);
  return s;
}

EvaluationReport evaluate_activity(const std::vector<double>& pred_active,
                                   const std::vector<double>& pred_passive,
                                   const std::vector<double>& truth_active,
                                   const std::vector<double>& truth_passive, double scale,
                                   std::size_t radius, double threshold_fraction) {
  EvaluationReport r;
  r.radius = radius;
  r.channels.push_back(
      score_channel("active", pred_active, truth_active, scale, radius, threshold_fraction));
  r.channels.push_back(
      score_channel("passive", pred_passive, truth_passive, scale, radius, threshold_fraction));
  return r;
}

std::vector<std::size_t> optimal_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t devices = cost.size();
  if (devices == 0)
    return {};
  const std::size_t channels = cost.front().size();
  if (channels < devices)
    throw DataError("assignment needs at least as many channels as devices");

  // Enumerate injective maps via permutations of the channel indices; the
  // first `devices` entries of each permutation form a candidate.
  std::vector<std::size_t> perm(channels);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t d = 0; d < devices; ++d)
      total += cost[d][perm[d]];
    if (total < best_cost) {
      best_cost = total;
      best.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(devices));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

EvaluationReport evaluate_multichannel(const std::vector<std::vector<double>>& channels,
                                       const std::vector<NamedSeries>& devices, double scale,
                                       std::size_t radius, double threshold_fraction) {
  if (channels.size() < devices.size())
    throw DataError("multichannel evaluation needs num_channels >= number of devices (" +
                    std::to_string(channels.size()) + " < " + std::to_string(devices.size()) +
                    ")");
  std::vector<std::vector<double>> cost(devices.size(), std::vector<double>(channels.size()));
  for (std::size_t d = 0; d < devices.size(); ++d) {
    for (std::size_t c = 0; c < channels.size(); ++c) {
      require_same_length(channels[c], devices[d].values, devices[d].name);
      cost[d][c] = mse(scaled(channels[c], scale), scaled(devices[d].values, scale));
    }
  }
  const auto assigned = optimal_assignment(cost);
  EvaluationReport r;
  r.radius = radius;
  for (std::size_t d = 0; d < devices.size(); ++d) {
    auto s = score_channel(devices[d].name, channels[assigned[d]], devices[d].values, scale,
                           radius, threshold_fraction);
    s.name += "<-channel_" + std::to_string(assigned[d] + 1);
    r.channels.push_back(std::move(s));
  }
  return r;
}

void write_report_csv(const std::filesystem::path& path, const EvaluationReport& report) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << "channel,mcc_r,mse_e4,degenerate\n";
  for (const auto& c : report.channels)
    out << c.name << ',' << format_double(c.mcc_r) << ',' << format_double(c.mse * 1e4) << ','
        << (c.degenerate ? 1 : 0) << '\n';
  if (!out)
    throw IoError("write failed: " + path.string());
}

std::string format_report(const EvaluationReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-32s %10s %12s\n", "channel",
                ("MCC_" + std::to_string(report.radius)).c_str(), "MSE x 1e4");
  out << line;
  for (const auto& c : report.channels) {
    std::snprintf(line, sizeof line, "%-32s %10.4f %12.4f%s\n", c.name.c_str(), c.mcc_r,
                  c.mse * 1e4, c.degenerate ? "  (degenerate: truth is all zero)" : "");
    out << line;
  }
  return out.str();
}

}  // namespace cscnilm
