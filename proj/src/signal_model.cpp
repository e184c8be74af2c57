#include "cscnilm/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cscnilm {

AggregateSignal::AggregateSignal(std::vector<double> samples, int sample_period_seconds,
                                 double scale)
    : samples_(std::move(samples)), sample_period_seconds_(sample_period_seconds),
      scale_(scale) {
  if (samples_.empty())
    throw std::invalid_argument("AggregateSignal: empty series");
  if (sample_period_seconds_ <= 0)
    throw std::invalid_argument("AggregateSignal: sample period must be positive");
  if (!(scale_ > 0.0) || !std::isfinite(scale_))
    throw std::invalid_argument("AggregateSignal: scale must be positive and finite");
  for (double v : samples_) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("AggregateSignal: samples must be finite and nonnegative");
  }
}

bool AggregateSignal::all_zero() const {
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v == 0.0; });
}

AggregateSignal normalize(std::span<const double> raw, int sample_period_seconds) {
  if (raw.empty())
    throw std::invalid_argument("normalize: empty input");
  double peak = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v))
      throw std::invalid_argument("normalize: non-finite sample");
    peak = std::max(peak, v);
  }
  std::vector<double> out(raw.size(), 0.0);
  if (peak == 0.0)
    return AggregateSignal(std::move(out), sample_period_seconds, 1.0);
  for (std::size_t j = 0; j < raw.size(); ++j)
    out[j] = std::max(raw[j], 0.0) / peak;
  return AggregateSignal(std::move(out), sample_period_seconds, peak);
}

ChannelArray::ChannelArray(std::size_t channels, std::size_t length, double fill)
    : channels_(channels), length_(length), data_(channels * length, fill) {}

std::span<double> ChannelArray::channel(std::size_t i) {
  if (i >= channels_)
    throw std::out_of_range("channel index " + std::to_string(i));
  return std::span<double>(data_).subspan(i * length_, length_);
}

std::span<const double> ChannelArray::channel(std::size_t i) const {
  if (i >= channels_)
    throw std::out_of_range("channel index " + std::to_string(i));
  return std::span<const double>(data_).subspan(i * length_, length_);
}

bool ChannelArray::all_nonnegative(double tol) const {
  return std::all_of(data_.begin(), data_.end(), [tol](double v) { return v >= -tol; });
}

bool ChannelArray::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Coefficients::Coefficients(std::size_t channels, std::size_t signal_length,
                           std::size_t half_width, double fill)
    : ChannelArray(channels, signal_length + 2 * half_width, fill), half_width_(half_width) {}

Atoms::Atoms(std::size_t channels, std::size_t half_width, double fill)
    : ChannelArray(channels, 2 * half_width + 1, fill) {}

bool Atoms::feasible(double tol) const {
  if (!all_nonnegative(tol))
    return false;
  for (std::size_t i = 0; i < channels(); ++i) {
    double sq = 0.0;
    for (double v : channel(i))
      sq += v * v;
    if (std::sqrt(sq) > 1.0 + tol)
      return false;
  }
  return true;
}

void SolverConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("SolverConfig: " + what); };
  if (!(lambda_passive > 0.0) || !std::isfinite(lambda_passive))
    fail("lambda_passive must be positive");
  if (!(lambda_active > 0.0) || !std::isfinite(lambda_active))
    fail("lambda_active must be positive");
  if (num_channels < 1)
    fail("num_channels must be at least 1");
  if (half_width < 1)
    fail("half_width must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    fail("epsilon must lie in (0, 1)");
  for (int b = 0; b < 2; ++b) {
    if (!(alpha_bar[b] > 0.0 && epsilon + alpha_bar[b] < 1.0))
      fail("alpha_bar must lie in (0, 1 - epsilon)");
    if (!(beta_bar[b] > 0.0) || !std::isfinite(beta_bar[b]))
      fail("beta_bar must be positive");
  }
  if (!(alpha_step >= 0.0 && alpha_step <= std::min(alpha_bar[0], alpha_bar[1])))
    fail("alpha_step must lie in [0, min(alpha_bar)]");
  if (!(beta_step >= 0.0 && beta_step <= std::min(beta_bar[0], beta_bar[1])))
    fail("beta_step must lie in [0, min(beta_bar)]");
  if (!(rel_tol > 0.0))
    fail("rel_tol must be positive");
  if (max_iter < 1)
    fail("max_iter must be at least 1");
  if (!(step_safety > 0.0) || !std::isfinite(step_safety))
    fail("step_safety must be positive");
}

}  // namespace cscnilm
