#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

namespace cscnilm {

/// Slack for constraint membership checks (c >= 0, p >= 0, ||p^i||_2 <= 1).
inline constexpr double kFeasibilityTolerance = 1e-12;

/// Observed household power series, normalized to [0, 1].
///
/// `scale()` is the factor that was divided out by `normalize`, so that
/// `scale() * samples()[j]` is the reading in original units.
class AggregateSignal {
public:
  AggregateSignal(std::vector<double> samples, int sample_period_seconds = 60,
                  double scale = 1.0);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  int sample_period_seconds() const { return sample_period_seconds_; }
  double scale() const { return scale_; }
  bool all_zero() const;

private:
  std::vector<double> samples_;
  int sample_period_seconds_;
  double scale_;
};

/// Clamps negative readings to zero and divides by the maximum.
/// An all-zero (or all-nonpositive) input yields all zeros with scale 1.
AggregateSignal normalize(std::span<const double> raw, int sample_period_seconds = 60);

/// N equally long real series stored contiguously, channel-major.
class ChannelArray {
public:
  ChannelArray() = default;
  ChannelArray(std::size_t channels, std::size_t length, double fill = 0.0);

  std::size_t channels() const { return channels_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return data_.size(); }

  std::span<double> channel(std::size_t i);
  std::span<const double> channel(std::size_t i) const;

  std::span<double> flat() { return data_; }
  std::span<const double> flat() const { return data_; }

  bool all_nonnegative(double tol = kFeasibilityTolerance) const;
  bool all_finite() const;

  friend bool operator==(const ChannelArray&, const ChannelArray&) = default;

private:
  std::size_t channels_ = 0;
  std::size_t length_ = 0;
  std::vector<double> data_;
};

/// Placement series c^i, each of length m + 2q. Channel 0 is the passive channel.
class Coefficients : public ChannelArray {
public:
  Coefficients() = default;
  Coefficients(std::size_t channels, std::size_t signal_length, std::size_t half_width,
               double fill = 0.0);

  std::size_t signal_length() const { return length() - 2 * half_width_; }
  std::size_t half_width() const { return half_width_; }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

private:
  std::size_t half_width_ = 0;
};

/// Kernels p^i, each of length 2q + 1.
class Atoms : public ChannelArray {
public:
  Atoms() = default;
  Atoms(std::size_t channels, std::size_t half_width, double fill = 0.0);

  std::size_t half_width() const { return (length() - 1) / 2; }

  /// Every entry >= 0 and every kernel inside the unit ball, up to tolerance.
  bool feasible(double tol = kFeasibilityTolerance) const;

  friend bool operator==(const Atoms&, const Atoms&) = default;
};

struct SolverConfig {
  double lambda_passive = 5.0;
  double lambda_active = 0.1;
  std::size_t num_channels = 4;
  std::size_t half_width = 30;
  double epsilon = 0.01;
  double alpha_bar[2] = {0.75, 0.75};
  double beta_bar[2] = {0.75, 0.75};
  double alpha_step = 0.7;
  double beta_step = 0.7;
  double rel_tol = 1e-6;
  std::size_t max_iter = 20000;
  std::uint64_t seed = 1;
  /// Multiplies both step-size denominators tau_1, tau_2.
  double step_safety = 1.0;
  /// Past iterations kept in the running Lipschitz maxima besides the
  /// current one. 0 keeps the entire history.
  std::size_t lipschitz_window = 50;

  /// Throws std::invalid_argument on the first violated constraint.
  void validate() const;
};

struct SolverState {
  Coefficients c_curr, c_prev;
  Atoms p_curr, p_prev;
  double psi = 0.0;
  double data_term = 0.0;
  std::size_t iter = 0;
  double L1_running_max = 0.0;
  double L2_running_max = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  std::deque<double> L1_history;
  std::deque<double> L2_history;
};

}  // namespace cscnilm
