#include "cscnilm/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

#include "cscnilm/csv_io.hpp"
#include "cscnilm/evaluation.hpp"
#include "cscnilm/ipalm.hpp"

namespace cscnilm {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw IoError("cannot create directory " + dir.string());
}

double series_peak(const std::vector<double>& x) {
  double peak = 0.0;
  for (double v : x)
    peak = std::max(peak, v);
  return peak > 0.0 ? peak : 1.0;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const NumericalDivergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const GeneratedData data = generate(config.household);
    ensure_dir(config.data_dir);
    write_series(config.data_dir / "aggregate.csv", data.aggregate);
    for (const auto& dev : data.devices)
      write_series(config.data_dir / ("truth_" + dev.name + ".csv"), dev.values);
    write_series(config.data_dir / "truth_active.csv", data.active_truth);
    write_series(config.data_dir / "truth_passive.csv", data.passive_truth);
    out << "generated " << data.aggregate.size() << " samples for " << data.devices.size()
        << " devices into " << config.data_dir.string() << '\n';
    return int{kExitOk};
  });
}

int cmd_disaggregate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const auto raw = read_series(config.data_dir / "aggregate.csv");
    if (raw.empty())
      throw DataError("aggregate.csv has no samples");
    const AggregateSignal u = normalize(raw, config.household.sample_period_seconds);

    const SolveResult result = solve(u, config.solver);
    ensure_dir(config.output_dir);

    auto channels = reconstruct_channels(result);
    for (auto& ch : channels) {
      for (double& v : ch)
        v *= u.scale();
    }
    for (std::size_t i = 0; i < channels.size(); ++i)
      write_series(config.output_dir / ("pred_channel_" + std::to_string(i + 1) + ".csv"),
                   channels[i]);
    write_series(config.output_dir / "pred_passive.csv", channels.front());
    write_series(config.output_dir / "pred_active.csv", active_prediction(channels));

    std::vector<std::string> header{"index"};
    std::vector<std::vector<double>> cols(1);
    for (std::size_t k = 0; k < result.atoms.length(); ++k)
      cols[0].push_back(static_cast<double>(k));
    for (std::size_t i = 0; i < result.atoms.channels(); ++i) {
      header.push_back("atom_" + std::to_string(i + 1));
      auto a = result.atoms.channel(i);
      cols.emplace_back(a.begin(), a.end());
    }
    write_columns(config.output_dir / "atoms.csv", header, cols);

    std::vector<double> iters(result.psi_history.size());
    for (std::size_t k = 0; k < iters.size(); ++k)
      iters[k] = static_cast<double>(k);
    write_columns(config.output_dir / "convergence.csv", {"iter", "psi", "data_term"},
                  {iters, result.psi_history, result.data_term_history});

    out << "iterations " << result.iterations << (result.converged ? " (converged)" : " (max_iter reached)")
        << ", objective " << format_double(result.final_objective) << '\n';
    return int{kExitOk};
  });
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const double scale = series_peak(read_series(config.data_dir / "aggregate.csv"));
    EvaluationReport report;
    if (config.mode == ExperimentMode::activity) {
      report = evaluate_activity(read_series(config.output_dir / "pred_active.csv"),
                                 read_series(config.output_dir / "pred_passive.csv"),
                                 read_series(config.data_dir / "truth_active.csv"),
                                 read_series(config.data_dir / "truth_passive.csv"), scale,
                                 config.radius, config.threshold_fraction);
    } else {
      std::vector<std::vector<double>> channels;
      for (std::size_t i = 0; i < config.solver.num_channels; ++i)
        channels.push_back(read_series(config.output_dir /
                                       ("pred_channel_" + std::to_string(i + 1) + ".csv")));
      std::vector<NamedSeries> devices;
      for (const auto& d : config.household.devices)
        devices.push_back({d.name, read_series(config.data_dir / ("truth_" + d.name + ".csv"))});
      report = evaluate_multichannel(channels, devices, scale, config.radius,
                                     config.threshold_fraction);
    }
    ensure_dir(config.output_dir);
    write_report_csv(config.output_dir / "report.csv", report);
    out << format_report(report);
    return int{kExitOk};
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convolutional sparse coding disaggregation of household power series"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> radius;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", config_path, "Path to key = value config file");
    if (config_required)
      opt->required();
    sub->add_option("--seed", seed, "Override the config seed");
    sub->add_option("--radius", radius, "Override the activity radius R");
  };
  auto* gen = app.add_subcommand("generate", "Write a semi-synthetic household");
  auto* dis = app.add_subcommand("disaggregate", "Decompose data_dir/aggregate.csv");
  auto* eva = app.add_subcommand("evaluate", "Score predictions against ground truth");
  auto* pc = app.add_subcommand("print-config", "Print the effective configuration");
  add_common(gen, true);
  add_common(dis, true);
  add_common(eva, true);
  add_common(pc, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDataError;
  }

  RunConfig config;
  try {
    if (!config_path.empty())
      config = load_run_config(config_path);
    if (seed)
      config.set_seed(*seed);
    if (radius)
      config.radius = *radius;
    config.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }

  if (*gen)
    return cmd_generate(config, out, err);
  if (*dis)
    return cmd_disaggregate(config, out, err);
  if (*eva)
    return cmd_evaluate(config, out, err);
  out << format_run_config(config);
  return kExitOk;
}

}  // namespace cscnilm
