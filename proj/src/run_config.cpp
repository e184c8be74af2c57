#include "cscnilm/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "cscnilm/csv_io.hpp"

namespace cscnilm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    parts.push_back(trim(cur));
  return parts;
}

double to_double(const std::string& v) {
  if (v == "inf" || v == "infinity")
    return std::numeric_limits<double>::infinity();
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || std::isnan(out))
    throw DataError("not a number: '" + v + "'");
  return out;
}

std::uint64_t to_uint(const std::string& v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw DataError("not a nonnegative integer: '" + v + "'");
  return out;
}

DeviceSpec parse_device(const std::string& value) {
  const auto f = split(value, ',');
  if (f.size() < 8)
    throw DataError("device needs at least 8 fields: name, shape, role, duration_min, "
                    "duration_max, amplitude_min, amplitude_max, activations_per_day");
  DeviceSpec d;
  d.name = f[0];
  auto shape = parse_shape(f[1]);
  if (!shape)
    throw DataError("unknown signature shape '" + f[1] + "'");
  d.shape = *shape;
  auto role = parse_role(f[2]);
  if (!role)
    throw DataError("unknown device role '" + f[2] + "'");
  d.role = *role;
  d.duration_min_minutes = to_double(f[3]);
  d.duration_max_minutes = to_double(f[4]);
  d.amplitude_min = to_double(f[5]);
  d.amplitude_max = to_double(f[6]);
  d.activations_per_day = to_double(f[7]);
  if (f.size() > 8)
    d.amplitude_jitter = to_double(f[8]);
  if (f.size() > 9)
    d.duration_jitter = to_double(f[9]);
  if (f.size() > 10)
    d.spike_fraction = to_double(f[10]);
  for (std::size_t k = 11; k < f.size(); ++k)
    d.forced_start_minutes.push_back(to_double(f[k]));
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  return d;
}

std::string format_device(const DeviceSpec& d) {
  std::string s = d.name + ", " + to_string(d.shape) + ", " + to_string(d.role);
  for (double v : {d.duration_min_minutes, d.duration_max_minutes, d.amplitude_min,
                   d.amplitude_max, d.activations_per_day, d.amplitude_jitter,
                   d.duration_jitter, d.spike_fraction})
    s += ", " + format_double(v);
  for (double t : d.forced_start_minutes)
    s += ", " + format_double(t);
  return s;
}

}  // namespace

void RunConfig::set_seed(std::uint64_t s) {
  seed = s;
  solver.seed = s;
  household.seed = s;
}

void RunConfig::validate() const {
  try {
    solver.validate();
    household.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  if (data_dir.empty() || output_dir.empty())
    throw DataError("data_dir and output_dir must be nonempty");
  if (!(threshold_fraction >= 0.0 && threshold_fraction <= 1.0))
    throw DataError("threshold_fraction must lie in [0, 1]");
}

RunConfig parse_run_config(const std::string& text) {
  RunConfig cfg;
  SolverConfig& s = cfg.solver;
  std::vector<DeviceSpec> devices;
  bool saw_device = false;

  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"seed", [&](const std::string& v) { cfg.seed = to_uint(v); }},
      {"days", [&](const std::string& v) { cfg.household.days = static_cast<int>(to_uint(v)); }},
      {"sample_period_seconds",
       [&](const std::string& v) { cfg.household.sample_period_seconds = static_cast<int>(to_uint(v)); }},
      {"lambda_passive", [&](const std::string& v) { s.lambda_passive = to_double(v); }},
      {"lambda_active", [&](const std::string& v) { s.lambda_active = to_double(v); }},
      {"num_channels", [&](const std::string& v) { s.num_channels = to_uint(v); }},
      {"half_width", [&](const std::string& v) { s.half_width = to_uint(v); }},
      {"epsilon", [&](const std::string& v) { s.epsilon = to_double(v); }},
      {"alpha_bar_1", [&](const std::string& v) { s.alpha_bar[0] = to_double(v); }},
      {"alpha_bar_2", [&](const std::string& v) { s.alpha_bar[1] = to_double(v); }},
      {"beta_bar_1", [&](const std::string& v) { s.beta_bar[0] = to_double(v); }},
      {"beta_bar_2", [&](const std::string& v) { s.beta_bar[1] = to_double(v); }},
      {"alpha_step", [&](const std::string& v) { s.alpha_step = to_double(v); }},
      {"beta_step", [&](const std::string& v) { s.beta_step = to_double(v); }},
      {"rel_tol", [&](const std::string& v) { s.rel_tol = to_double(v); }},
      {"max_iter", [&](const std::string& v) { s.max_iter = to_uint(v); }},
      {"step_safety", [&](const std::string& v) { s.step_safety = to_double(v); }},
      {"lipschitz_window", [&](const std::string& v) { s.lipschitz_window = to_uint(v); }},
      {"mode",
       [&](const std::string& v) {
         if (v == "activity")
           cfg.mode = ExperimentMode::activity;
         else if (v == "multichannel")
           cfg.mode = ExperimentMode::multichannel;
         else
           throw DataError("mode must be 'activity' or 'multichannel'");
       }},
      {"radius", [&](const std::string& v) { cfg.radius = to_uint(v); }},
      {"threshold_fraction", [&](const std::string& v) { cfg.threshold_fraction = to_double(v); }},
      {"data_dir", [&](const std::string& v) { cfg.data_dir = v; }},
      {"output_dir", [&](const std::string& v) { cfg.output_dir = v; }},
      {"device",
       [&](const std::string& v) {
         devices.push_back(parse_device(v));
         saw_device = true;
       }},
  };

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end())
      throw DataError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (value.empty())
      throw DataError("config line " + std::to_string(lineno) + ": empty value for '" + key + "'");
    try {
      it->second(value);
    } catch (const DataError& e) {
      throw DataError("config line " + std::to_string(lineno) + " (" + key + "): " + e.what());
    }
  }
  if (saw_device)
    cfg.household.devices = std::move(devices);
  cfg.set_seed(cfg.seed);
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string format_run_config(const RunConfig& c) {
  const SolverConfig& s = c.solver;
  std::ostringstream out;
  out << "# pipeline\n"
      << "seed = " << c.seed << '\n'
      << "mode = " << (c.mode == ExperimentMode::activity ? "activity" : "multichannel") << '\n'
      << "data_dir = " << c.data_dir.string() << '\n'
      << "output_dir = " << c.output_dir.string() << '\n'
      << "\n# household generator\n"
      << "days = " << c.household.days << '\n'
      << "sample_period_seconds = " << c.household.sample_period_seconds << '\n'
      << "# device = name, shape, role, duration_min, duration_max, amplitude_min, "
         "amplitude_max, activations_per_day, amplitude_jitter, duration_jitter, "
         "spike_fraction[, forced start minutes...]\n";
  for (const auto& d : c.household.devices)
    out << "device = " << format_device(d) << '\n';
  out << "\n# solver\n"
      << "lambda_passive = " << format_double(s.lambda_passive) << '\n'
      << "lambda_active = " << format_double(s.lambda_active) << '\n'
      << "num_channels = " << s.num_channels << '\n'
      << "half_width = " << s.half_width << '\n'
      << "epsilon = " << format_double(s.epsilon) << '\n'
      << "alpha_bar_1 = " << format_double(s.alpha_bar[0]) << '\n'
      << "alpha_bar_2 = " << format_double(s.alpha_bar[1]) << '\n'
      << "beta_bar_1 = " << format_double(s.beta_bar[0]) << '\n'
      << "beta_bar_2 = " << format_double(s.beta_bar[1]) << '\n'
      << "alpha_step = " << format_double(s.alpha_step) << '\n'
      << "beta_step = " << format_double(s.beta_step) << '\n'
      << "rel_tol = " << format_double(s.rel_tol) << '\n'
      << "max_iter = " << s.max_iter << '\n'
      << "step_safety = " << format_double(s.step_safety) << '\n'
      << "lipschitz_window = " << s.lipschitz_window << '\n'
      << "\n# evaluation\n"
      << "radius = " << c.radius << '\n'
      << "threshold_fraction = " << format_double(c.threshold_fraction) << '\n';
  return out.str();
}

}  // namespace cscnilm
