#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cscnilm {

enum class SignatureShape { rectangular, spiked_cycle, ramp, double_pulse };
enum class DeviceRole { active, passive };

const char* to_string(SignatureShape shape);
const char* to_string(DeviceRole role);
std::optional<SignatureShape> parse_shape(const std::string& name);
std::optional<DeviceRole> parse_role(const std::string& name);

struct DeviceSpec {
  std::string name;
  SignatureShape shape = SignatureShape::rectangular;
  DeviceRole role = DeviceRole::active;
  double duration_min_minutes = 1.0;
  double duration_max_minutes = 1.0;
  double amplitude_min = 1.0;  ///< watts
  double amplitude_max = 1.0;
  double activations_per_day = 1.0;
  double amplitude_jitter = 0.0;  ///< relative, uniform in [-j, j]
  double duration_jitter = 0.0;
  double spike_fraction = 0.0;  ///< spiked-cycle only
  /// When nonempty, activations start exactly at these minutes and the
  /// Poisson schedule is skipped.
  std::vector<double> forced_start_minutes;

  /// Throws std::invalid_argument describing the first problem.
  void validate() const;
};

struct Household {
  std::vector<DeviceSpec> devices;
  int days = 28;
  int sample_period_seconds = 60;
  std::uint64_t seed = 1;

  void validate() const;
};

/// One passive fridge-like device and three active appliances.
Household default_household();

struct DeviceTrace {
  std::string name;
  DeviceRole role;
  std::vector<double> values;
};

struct GeneratedData {
  std::vector<double> aggregate;  ///< passive_truth + active_truth, watts
  std::vector<DeviceTrace> devices;
  std::vector<double> active_truth;
  std::vector<double> passive_truth;
  int sample_period_seconds = 60;
};

/// Renders every device's schedule. Output samples are whole watts, so all
/// sums of traces are exact in floating point.
GeneratedData generate(const Household& household);

/// Compressor-like cycle: one spike sample at amplitude (1 + spike_fraction),
/// a plateau at amplitude, and a half-cosine tail over the last
/// ceil(duration / 10) samples.
std::vector<double> spiked_cycle_signature(std::size_t duration, double amplitude,
                                           double spike_fraction);

/// Shape rendered at a given length in samples.
std::vector<double> render_signature(SignatureShape shape, std::size_t duration,
                                     double amplitude, double spike_fraction = 0.0);

}  // namespace cscnilm
