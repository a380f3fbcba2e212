#include "casimir/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "casimir/analytic.hpp"
#include "casimir/errors.hpp"
#include "casimir/io.hpp"

namespace casimir {
namespace {

struct Source {
  std::string config_path;
  std::string preset;
};

void add_source(CLI::App& cmd, Source& src) {
  auto* config = cmd.add_option("--config", src.config_path, "Run configuration (JSON)");
  auto* preset = cmd.add_option("--preset", src.preset, "Built-in preset: paper-defaults");
  config->excludes(preset);
  preset->excludes(config);
}

RunConfig load(const Source& src) {
  if (!src.preset.empty()) {
    const auto doc = preset_document(src.preset);
    if (!doc) throw ConfigError("--preset: unknown preset '" + src.preset + "'");
    return parse_config(nlohmann::json::parse(*doc));
  }
  if (src.config_path.empty()) throw ConfigError("--config: required (or give --preset)");
  return load_config(src.config_path);
}

std::string sci4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

int exit_for(Termination t) { return t == Termination::Completed ? kExitOk : kExitPhysics; }

template <typename Writer>
void write_file(const std::string& path, const char* flag, Writer&& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError(std::string(flag) + ": cannot write '" + path + "'");
  writer(file);
  file.flush();
  if (!file) throw ConfigError(std::string(flag) + ": failed writing '" + path + "'");
}

int cmd_simulate(const Source& src, const std::string& out_csv, const std::string& out_report,
                 std::ostream& out) {
  RunConfig config = load(src);
  if (!out_csv.empty()) config.trajectory_csv = out_csv;
  if (!out_report.empty()) config.report_json = out_report;

  Trajectory traj;
  const SimulationReport report = run_simulation(config, &traj);
  const std::string text = dump_json(to_json(report));

  if (config.trajectory_csv) {
    write_file(*config.trajectory_csv, "--out", [&](std::ostream& f) { write_trajectory_csv(f, traj); });
  }
  if (config.report_json) {
    write_file(*config.report_json, "--report", [&](std::ostream& f) { f << text; });
  } else {
    out << text;
  }
  return exit_for(report.termination);
}

int cmd_period(const Source& src, bool simulate, std::ostream& out) {
  const RunConfig config = load(src);
  out << "omega_analytic = " << sci4(linear_omega(config.params)) << " rad/s\n";
  out << "T_analytic = " << sci4(linear_period(config.params)) << " s\n";
  if (!simulate) return kExitOk;

  const SimulationReport report = run_simulation(config);
  if (report.simulated_period_s) {
    out << "T_simulated = " << sci4(*report.simulated_period_s) << " s\n";
    out << "period_rel_diff = " << sci4(*report.period_rel_diff) << '\n';
  } else {
    out << "T_simulated = none\n";
  }
  out << "termination = " << to_string(report.termination) << '\n';
  return exit_for(report.termination);
}

int cmd_sweep(const Source& src, const SweepSpec& spec, const std::string& out_csv,
              std::ostream& out) {
  const RunConfig config = load(src);
  const auto rows = run_sweep(config, spec);
  if (out_csv.empty()) {
    write_sweep_csv(out, rows);
  } else {
    write_file(out_csv, "--out", [&](std::ostream& f) { write_sweep_csv(f, rows); });
  }
  return kExitOk;
}

int cmd_validate(const Source& src, std::ostream& out) {
  const RunConfig config = load(src);
  out << dump_json(to_json(validate(config.params, config.phi0, config.regime_margin)));
  return kExitOk;
}

int cmd_estimate(const NanostringSpec& spec, double gap, std::ostream& out) {
  PendulumParams params;
  try {
    params = estimate_params(spec, gap);
  } catch (const DomainError& e) {
    const std::string what = e.what();
    const char* flag = what.starts_with("n_atoms")         ? "--atoms"
                       : what.starts_with("atom_radius")   ? "--atom-radius"
                       : what.starts_with("atomic_weight") ? "--atomic-weight"
                                                           : "--gap";
    throw ConfigError(std::string(flag) + ": " + what);
  }
  out << dump_json(ordered_json{{"params", params_to_json(params)}});
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir atomic pendulum simulator", "casimir_pendulum"};
  app.require_subcommand(1);

  Source src;
  std::string out_csv, out_report;
  bool simulate_period = false;
  SweepSpec sweep{};
  bool log_scale = false;
  NanostringSpec nano{};
  double gap = 0.0;

  auto* simulate = app.add_subcommand("simulate", "Integrate the pendulum; write trajectory CSV and report JSON");
  add_source(*simulate, src);
  simulate->add_option("--out", out_csv, "Trajectory CSV path");
  simulate->add_option("--report", out_report, "Report JSON path (stdout when absent)");

  auto* period = app.add_subcommand("period", "Print the small-angle angular frequency and period");
  add_source(*period, src);
  period->add_flag("--simulate", simulate_period, "Also integrate and report the measured period");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter; CSV of analytic and simulated periods");
  add_source(*sweep_cmd, src);
  sweep_cmd->add_option("--param", sweep.param, "d_m, l_m, mass_kg, alpha0_m3, omega0_rad_s, beta or phi0_rad")
      ->required();
  sweep_cmd->add_option("--from", sweep.from)->required();
  sweep_cmd->add_option("--to", sweep.to)->required();
  sweep_cmd->add_option("--points", sweep.points)->required();
  sweep_cmd->add_flag("--log", log_scale, "Logarithmic spacing");
  sweep_cmd->add_option("--out", out_csv, "CSV path (stdout when absent)");

  auto* validate_cmd = app.add_subcommand("validate", "Print the validity report as JSON");
  add_source(*validate_cmd, src);

  auto* estimate = app.add_subcommand("estimate", "Estimate pendulum parameters from atomic data");
  estimate->add_option("--atoms", nano.n_atoms)->required();
  estimate->add_option("--atom-radius", nano.atom_radius, "m")->required();
  estimate->add_option("--atomic-weight", nano.atomic_weight, "g/mol")->required();
  estimate->add_option("--gap", gap, "tip-to-plate gap, m")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(src, out_csv, out_report, out);
    if (*period) return cmd_period(src, simulate_period, out);
    if (*sweep_cmd) {
      sweep.scale = log_scale ? SweepScale::Log : SweepScale::Linear;
      return cmd_sweep(src, sweep, out_csv, out);
    }
    if (*validate_cmd) return cmd_validate(src, out);
    if (*estimate) return cmd_estimate(nano, gap, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace casimir
