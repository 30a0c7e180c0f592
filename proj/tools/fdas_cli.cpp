// Command-line front end: Monte-Carlo throughput runs and parameter sweeps
// for joint transmit/receive antenna selection at a full-duplex station.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdas/channel.hpp"
#include "fdas/montecarlo.hpp"
#include "fdas/svg.hpp"
#include "fdas/table.hpp"

namespace {

struct CliOptions {
  fdas::SimConfig config;
  std::string strategy = "mm";
  double weight = 0.5;
  double sharpness = 1.0;
  bool auto_w = false;
  std::string mo_method = "ws";
  std::string mo_gain = "amp";
  std::string w_grid = "0:1:0.05";
  std::string snr_grid = "0:20:2";
  std::string csv_path;
  std::string svg_path;
  double gamma_t_db = 10.0;
  double gamma_t_ul_db = std::nan("");
  int threads = 1;
};

/// "a:b:step" (inclusive of b when the step lands on it) or a single value.
std::vector<double> parse_grid(const std::string& text,
                               const std::string& flag) {
  const auto fail = [&] {
    throw fdas::ConfigError(
        "invalid grid '" + text + "' for " + flag + " (want value or a:b:step)",
        {flag});
  };
  std::vector<double> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(':', begin), text.size());
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(text.substr(begin, end - begin), &used));
      if (used != end - begin) fail();
    } catch (const std::logic_error&) {
      fail();
    }
    begin = end + 1;
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) fail();
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!std::isfinite(a) || !std::isfinite(b) || !(step > 0) || b < a) fail();
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double x = a + k * step;
    if (x > b + step * 1e-9) break;
    grid.push_back(std::min(x, b));
  }
  return grid;
}

fdas::StrategyKind mo_kind(const std::string& method) {
  return method == "ewc" ? fdas::StrategyKind::mo_ewc
                         : fdas::StrategyKind::mo_ws;
}

fdas::SimConfig build_config(const CliOptions& cli,
                             fdas::StrategyKind kind) {
  fdas::SimConfig config = cli.config;
  config.gamma_t_dl_db = cli.gamma_t_db;
  config.gamma_t_ul_db =
      std::isnan(cli.gamma_t_ul_db) ? cli.gamma_t_db : cli.gamma_t_ul_db;
  config.strategy.kind = kind;
  config.strategy.weight = cli.weight;
  config.strategy.sharpness = cli.sharpness;
  config.strategy.domain = cli.mo_gain == "power" ? fdas::GainDomain::power
                                                  : fdas::GainDomain::amplitude;
  return config;
}

void require_threads(int threads) {
  if (threads < 1) {
    throw fdas::ConfigError("invalid configuration field(s): threads",
                            {"threads"});
  }
}

void write_output(const std::string& content, const std::string& path,
                  const char* what) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    throw std::runtime_error(std::string("cannot write ") + what + " to '" +
                             path + "'");
  }
}

void maybe_write_svg(const CliOptions& cli, const fdas::SweepResult& sweep,
                     const std::string& x_label) {
  if (cli.svg_path.empty()) return;
  fdas::ChartSpec chart;
  chart.x_label = x_label;
  chart.y_label = "sum throughput [bits/s/Hz]";
  for (std::size_t s = 0; s < sweep.labels.size(); ++s) {
    fdas::ChartSeries series;
    series.name = sweep.labels[s];
    series.x = sweep.x;
    for (const auto& row : sweep.estimates) series.y.push_back(row[s].c_t);
    chart.series.push_back(std::move(series));
  }
  write_output(fdas::render_line_chart(chart), cli.svg_path, "SVG");
}

double resolved_weight(const CliOptions& cli, const fdas::SimConfig& config) {
  if (!cli.auto_w) return cli.weight;
  return fdas::empirical_weight(fdas::db_to_linear(config.eta_db),
                                config.snr_db);
}

int run_single(const CliOptions& cli) {
  fdas::SimConfig config =
      build_config(cli, fdas::parse_strategy_kind(cli.strategy));
  fdas::validate(config);
  require_threads(cli.threads);
  const bool is_mo = config.strategy.kind == fdas::StrategyKind::mo_ws ||
                     config.strategy.kind == fdas::StrategyKind::mo_ewc;
  if (is_mo) config.strategy.weight = resolved_weight(cli, config);
  const fdas::ThroughputEstimate est = fdas::run_trials(config, cli.threads);
  write_output(fdas::to_csv(fdas::make_run_table(config, est)), cli.csv_path,
               "CSV");
  return 0;
}

int run_sweep_w(const CliOptions& cli) {
  fdas::SimConfig base = build_config(cli, mo_kind(cli.mo_method));
  fdas::validate(base);
  require_threads(cli.threads);
  const std::vector<double> grid = parse_grid(cli.w_grid, "w-grid");
  const fdas::SweepResult sweep =
      fdas::sweep_weight(base, grid, cli.threads);
  const fdas::OutputTable table = fdas::make_sweep_table(
      "sweep-w", "w", base, sweep,
      {{"mo-method", cli.mo_method},
       {"p", fdas::format_cell(base.strategy.sharpness)},
       {"w-grid", cli.w_grid}});
  write_output(fdas::to_csv(table), cli.csv_path, "CSV");
  maybe_write_svg(cli, sweep, "w");
  return 0;
}

int run_sweep_snr(const CliOptions& cli) {
  fdas::SimConfig base = build_config(cli, mo_kind(cli.mo_method));
  fdas::validate(base);
  require_threads(cli.threads);
  const std::vector<double> grid = parse_grid(cli.snr_grid, "snr-grid");
  const fdas::SweepResult sweep =
      fdas::sweep_snr(base, grid, cli.auto_w, cli.threads);
  const fdas::OutputTable table = fdas::make_sweep_table(
      "sweep-snr", "gamma0_db", base, sweep,
      {{"mo-method", cli.mo_method},
       {"auto-w", cli.auto_w ? "1" : "0"},
       {"w", fdas::format_cell(base.strategy.weight)},
       {"p", fdas::format_cell(base.strategy.sharpness)},
       {"snr-grid", cli.snr_grid}});
  write_output(fdas::to_csv(table), cli.csv_path, "CSV");
  maybe_write_svg(cli, sweep, "gamma0 [dB]");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monte-Carlo link simulator for joint transmit/receive antenna "
      "selection at a full-duplex base station"};
  app.set_version_flag("--version", FDAS_VERSION);
  app.set_config("--config", "",
                 "Read options from a key=value file (flags take precedence)");
  app.require_subcommand(1);

  CliOptions cli;
  app.add_option("--mt", cli.config.m_t, "Transmit antennas (>= 1)");
  app.add_option("--mr", cli.config.m_r, "Receive antennas (>= 1)");
  app.add_option("--snr-db", cli.config.snr_db, "Transmit SNR in dB");
  app.add_option("--eta-db", cli.config.eta_db,
                 "Residual self-interference factor in dB (<= 0)");
  app.add_option("--gamma-t-db", cli.gamma_t_db,
                 "SINR threshold in dB (both directions)");
  app.add_option("--gamma-t-ul-db", cli.gamma_t_ul_db,
                 "Uplink SINR threshold in dB (overrides --gamma-t-db)")
      ->default_str("(=gamma-t-db)");
  app.add_option("--samples", cli.config.n_samples,
                 "Monte-Carlo trials (>= 1)");
  app.add_option("--seed", cli.config.seed, "Master RNG seed");
  app.add_option("--strategy", cli.strategy,
                 "Selection rule for 'run': mm, li, mo-ws, mo-ewc")
      ->check(CLI::IsMember({"mm", "li", "mo-ws", "mo-ewc"}));
  app.add_option("--w", cli.weight, "Scalarization weight in [0, 1]");
  app.add_option("--p", cli.sharpness,
                 "Sharpness p > 0 of the exponentially weighted criterion");
  app.add_flag("--auto-w", cli.auto_w,
               "Derive w from eta and the SNR instead of --w");
  app.add_option("--mo-method", cli.mo_method,
                 "Multi-objective rule for sweeps: ws or ewc")
      ->check(CLI::IsMember({"ws", "ewc"}));
  app.add_option("--mo-gain", cli.mo_gain,
                 "Gain scale scored by mo-ws/mo-ewc: amp or power")
      ->check(CLI::IsMember({"amp", "power"}));
  app.add_option("--w-grid", cli.w_grid, "Weight grid for sweep-w (a:b:step)",
                 true);
  app.add_option("--snr-grid", cli.snr_grid,
                 "SNR grid in dB for sweep-snr (a:b:step)", true);
  app.add_option("--csv", cli.csv_path, "Write the CSV here (default stdout)");
  app.add_option("--svg", cli.svg_path, "Also write an SVG chart (sweeps)");
  app.add_option("--threads", cli.threads,
                 "Worker threads (>= 1; does not affect results)");

  CLI::App* cmd_run =
      app.add_subcommand("run", "One estimate for a single selection rule");
  CLI::App* cmd_sweep_w =
      app.add_subcommand("sweep-w", "Sweep the scalarization weight");
  CLI::App* cmd_sweep_snr =
      app.add_subcommand("sweep-snr", "Sweep the transmit SNR");
  for (CLI::App* sub : {cmd_run, cmd_sweep_w, cmd_sweep_snr}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n"
              << "Run '" << argv[0] << " --help' for usage.\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_run)) return run_single(cli);
    if (app.got_subcommand(cmd_sweep_w)) return run_sweep_w(cli);
    return run_sweep_snr(cli);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
