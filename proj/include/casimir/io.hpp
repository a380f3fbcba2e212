#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "casimir/estimation.hpp"
#include "casimir/integrator.hpp"

namespace casimir {

using ordered_json = nlohmann::ordered_json;

/// Malformed or inconsistent run configuration. The message names the key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One simulation run as described by a JSON config document.
struct RunConfig {
  PendulumParams params = paper_defaults();
  double phi0 = 1e-3;     // rad, released at this angle
  double phi_dot0 = 0.0;  // rad / s
  IntegratorConfig integrator{};
  // Exactly one end-time form is set: absolute seconds or a multiple of the linear period.
  std::optional<double> t_max_s;
  std::optional<double> t_max_periods = 10.0;
  double regime_margin = kDefaultRegimeMargin;
  std::optional<std::string> trajectory_csv;
  std::optional<std::string> report_json;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);
ordered_json to_json(const RunConfig& config);
ordered_json params_to_json(const PendulumParams& params);

/// Built-in preset documents by name ("paper-defaults").
std::optional<std::string_view> preset_document(std::string_view name);

/// The integrator config with t_max resolved to seconds for these params.
IntegratorConfig resolved_integrator(const RunConfig& config);

struct SimulationReport {
  double analytic_omega_rad_s;
  double analytic_period_s;
  std::optional<double> simulated_period_s;
  std::optional<double> period_rel_diff;
  double energy_drift;
  ValidityReport validity;
  Termination termination;
};

/// validate -> integrate -> estimate_period -> energy_drift.
SimulationReport run_simulation(const RunConfig& config, Trajectory* trajectory_out = nullptr);

ordered_json to_json(const ValidityReport& report);
ordered_json to_json(const SimulationReport& report);

/// Shortest round-trip scientific representation, e.g. "3.733445632424793e-07".
std::string format_number(double value);

/// JSON text with every floating-point value in format_number form.
std::string dump_json(const ordered_json& doc, int indent = 2);

/// Header `t_s,phi_rad,phi_dot_rad_s,R_m,energy_J`, LF line endings.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

enum class SweepScale { Linear, Log };

struct SweepSpec {
  std::string param;
  double from;
  double to;
  int points;
  SweepScale scale = SweepScale::Linear;
};

struct SweepRow {
  double value;
  std::optional<double> t_analytic;
  std::optional<double> t_simulated;
  bool verdict;
};

inline constexpr std::string_view kSweepParams[] = {"d_m",          "l_m",  "mass_kg", "alpha0_m3",
                                                    "omega0_rad_s", "beta", "phi0_rad"};

std::vector<double> sweep_values(const SweepSpec& spec);

/// Evaluates the points concurrently; rows come back in input order.
std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepSpec& spec,
                                unsigned threads = 0);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace casimir
