#include "cscnilm/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cscnilm {

namespace {

constexpr double kMinutesPerDay = 24.0 * 60.0;

std::size_t minutes_to_samples(double minutes, int period_seconds) {
  return static_cast<std::size_t>(std::llround(minutes * 60.0 / period_seconds));
}

}  // namespace

const char* to_string(SignatureShape shape) {
  switch (shape) {
    case SignatureShape::rectangular: return "rectangular";
    case SignatureShape::spiked_cycle: return "spiked-cycle";
    case SignatureShape::ramp: return "ramp";
    case SignatureShape::double_pulse: return "double-pulse";
  }
  return "?";
}

const char* to_string(DeviceRole role) {
  return role == DeviceRole::active ? "active" : "passive";
}

std::optional<SignatureShape> parse_shape(const std::string& name) {
  for (auto s : {SignatureShape::rectangular, SignatureShape::spiked_cycle, SignatureShape::ramp,
                 SignatureShape::double_pulse}) {
    if (name == to_string(s))
      return s;
  }
  return std::nullopt;
}

std::optional<DeviceRole> parse_role(const std::string& name) {
  if (name == "active")
    return DeviceRole::active;
  if (name == "passive")
    return DeviceRole::passive;
  return std::nullopt;
}

void DeviceSpec::validate() const {
  auto fail = [this](const std::string& what) {
    throw std::invalid_argument("device '" + name + "': " + what);
  };
  if (name.empty())
    throw std::invalid_argument("device with empty name");
  for (char ch : name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-'))
      fail("name may only contain letters, digits, '_' and '-'");
  }
  if (!(duration_min_minutes >= 1.0) || duration_max_minutes < duration_min_minutes)
    fail("duration range must satisfy 1 <= min <= max");
  if (duration_max_minutes * (1.0 + duration_jitter) > kMinutesPerDay)
    fail("duration exceeds one day");
  if (!(amplitude_min > 0.0) || amplitude_max < amplitude_min)
    fail("amplitude range must satisfy 0 < min <= max");
  if (!(activations_per_day >= 0.0) || !std::isfinite(activations_per_day))
    fail("activations_per_day must be nonnegative");
  if (!(amplitude_jitter >= 0.0 && amplitude_jitter < 1.0))
    fail("amplitude jitter must lie in [0, 1)");
  if (!(duration_jitter >= 0.0 && duration_jitter < 1.0))
    fail("duration jitter must lie in [0, 1)");
  if (!(spike_fraction >= 0.0))
    fail("spike fraction must be nonnegative");
  for (double t : forced_start_minutes) {
    if (!(t >= 0.0))
      fail("forced start times must be nonnegative");
  }
}

void Household::validate() const {
  if (days < 1)
    throw std::invalid_argument("household: days must be at least 1");
  if (sample_period_seconds < 1 || 86400 % sample_period_seconds != 0)
    throw std::invalid_argument("household: sample period must divide one day");
  for (const auto& d : devices)
    d.validate();
  for (std::size_t a = 0; a < devices.size(); ++a) {
    for (std::size_t b = a + 1; b < devices.size(); ++b) {
      if (devices[a].name == devices[b].name)
        throw std::invalid_argument("household: duplicate device name '" + devices[a].name + "'");
    }
  }
}

Household default_household() {
  Household h;
  DeviceSpec fridge;
  fridge.name = "fridge";
  fridge.shape = SignatureShape::spiked_cycle;
  fridge.role = DeviceRole::passive;
  fridge.duration_min_minutes = 18;
  fridge.duration_max_minutes = 24;
  fridge.amplitude_min = 80;
  fridge.amplitude_max = 100;
  fridge.activations_per_day = 30;
  fridge.amplitude_jitter = 0.05;
  fridge.duration_jitter = 0.1;
  fridge.spike_fraction = 0.6;

  DeviceSpec kettle;
  kettle.name = "kettle";
  kettle.shape = SignatureShape::rectangular;
  kettle.duration_min_minutes = 3;
  kettle.duration_max_minutes = 5;
  kettle.amplitude_min = 1800;
  kettle.amplitude_max = 2200;
  kettle.activations_per_day = 3;
  kettle.amplitude_jitter = 0.05;

  DeviceSpec washer;
  washer.name = "washing_machine";
  washer.shape = SignatureShape::double_pulse;
  washer.duration_min_minutes = 40;
  washer.duration_max_minutes = 55;
  washer.amplitude_min = 400;
  washer.amplitude_max = 600;
  washer.activations_per_day = 0.5;
  washer.amplitude_jitter = 0.1;
  washer.duration_jitter = 0.05;

  DeviceSpec heater;
  heater.name = "heater";
  heater.shape = SignatureShape::ramp;
  heater.duration_min_minutes = 25;
  heater.duration_max_minutes = 45;
  heater.amplitude_min = 1000;
  heater.amplitude_max = 1400;
  heater.activations_per_day = 1;
  heater.amplitude_jitter = 0.05;
  heater.duration_jitter = 0.05;

  h.devices = {fridge, kettle, washer, heater};
  return h;
}

std::vector<double> spiked_cycle_signature(std::size_t duration, double amplitude,
                                           double spike_fraction) {
  if (duration < 2)
    throw std::invalid_argument("spiked_cycle_signature: duration must be at least 2");
  std::vector<double> s(duration, amplitude);
  const std::size_t tail = std::min<std::size_t>((duration + 9) / 10, duration - 1);
  for (std::size_t t = 0; t < tail; ++t) {
    const double phase = std::numbers::pi * static_cast<double>(t + 1) / static_cast<double>(tail + 1);
    s[duration - tail + t] = amplitude * 0.5 * (1.0 + std::cos(phase));
  }
  s[0] = amplitude * (1.0 + spike_fraction);
  return s;
}

std::vector<double> render_signature(SignatureShape shape, std::size_t duration,
                                     double amplitude, double spike_fraction) {
  if (duration == 0)
    return {};
  switch (shape) {
    case SignatureShape::rectangular:
      return std::vector<double>(duration, amplitude);
    case SignatureShape::spiked_cycle:
      if (duration < 2)
        return {amplitude * (1.0 + spike_fraction)};
      return spiked_cycle_signature(duration, amplitude, spike_fraction);
    case SignatureShape::ramp: {
      std::vector<double> s(duration);
      for (std::size_t k = 0; k < duration; ++k)
        s[k] = amplitude * static_cast<double>(k + 1) / static_cast<double>(duration);
      return s;
    }
    case SignatureShape::double_pulse: {
      if (duration < 3)
        return std::vector<double>(duration, amplitude);
      // Two pulses of 40% each around a 20% pause.
      std::vector<double> s(duration, 0.0);
      const std::size_t pulse = std::max<std::size_t>(1, (duration * 2) / 5);
      for (std::size_t k = 0; k < pulse; ++k) {
        s[k] = amplitude;
        s[duration - 1 - k] = amplitude;
      }
      return s;
    }
  }
  return {};
}

GeneratedData generate(const Household& household) {
  household.validate();
  const std::size_t per_day = 86400 / static_cast<std::size_t>(household.sample_period_seconds);
  const std::size_t m = per_day * static_cast<std::size_t>(household.days);

  GeneratedData out;
  out.sample_period_seconds = household.sample_period_seconds;
  out.active_truth.assign(m, 0.0);
  out.passive_truth.assign(m, 0.0);

  std::mt19937_64 rng(household.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (const DeviceSpec& dev : household.devices) {
    DeviceTrace trace{dev.name, dev.role, std::vector<double>(m, 0.0)};

    auto draw_duration = [&]() {
      const double base = dev.duration_min_minutes +
                          (dev.duration_max_minutes - dev.duration_min_minutes) * unit(rng);
      const double jitter = 1.0 + dev.duration_jitter * (2.0 * unit(rng) - 1.0);
      return std::max<std::size_t>(1, minutes_to_samples(base * jitter, household.sample_period_seconds));
    };
    auto draw_amplitude = [&]() {
      const double base = dev.amplitude_min + (dev.amplitude_max - dev.amplitude_min) * unit(rng);
      return base * (1.0 + dev.amplitude_jitter * (2.0 * unit(rng) - 1.0));
    };

    std::size_t busy_until = 0;
    auto place = [&](std::size_t start) {
      if (start >= m || start < busy_until)
        return;  // same-device overlap is rejected
      const std::size_t duration = draw_duration();
      const double amplitude = draw_amplitude();
      const auto shape = render_signature(dev.shape, duration, amplitude, dev.spike_fraction);
      for (std::size_t k = 0; k < shape.size() && start + k < m; ++k)
        trace.values[start + k] = std::round(shape[k]);
      busy_until = start + duration;
    };

    if (!dev.forced_start_minutes.empty()) {
      std::vector<double> starts = dev.forced_start_minutes;
      std::sort(starts.begin(), starts.end());
      for (double t : starts)
        place(minutes_to_samples(t, household.sample_period_seconds));
    } else if (dev.activations_per_day > 0.0) {
      std::exponential_distribution<double> gap(dev.activations_per_day / static_cast<double>(per_day));
      double t = gap(rng);
      while (t < static_cast<double>(m)) {
        place(static_cast<std::size_t>(t));
        t += gap(rng);
      }
    }

    auto& sink = dev.role == DeviceRole::active ? out.active_truth : out.passive_truth;
    for (std::size_t j = 0; j < m; ++j)
      sink[j] += trace.values[j];
    out.devices.push_back(std::move(trace));
  }

  out.aggregate.resize(m);
  for (std::size_t j = 0; j < m; ++j)
    out.aggregate[j] = out.passive_truth[j] + out.active_truth[j];
  return out;
}

}  // namespace cscnilm
