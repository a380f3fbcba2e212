#include "casimir/io.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "casimir/analytic.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

using nlohmann::json;

constexpr std::string_view kPaperDefaults = R"({
  "params": {
    "d_m": 2e-08,
    "l_m": 1e-08,
    "mass_kg": 1e-24,
    "alpha0_m3": 1e-30,
    "omega0_rad_s": 1e+15,
    "beta": 2e+00,
    "include_gravity": true
  },
  "initial": {
    "phi0_rad": 1e-03
  },
  "integrator": {
    "method": "rk45",
    "rel_tol": 1e-10,
    "abs_tol": 1e-12,
    "t_max_periods": 1e+01,
    "max_steps": 10000000,
    "record_stride": 1
  }
}
)";

void reject_unknown(const json& obj, std::string_view section,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) {
    throw ConfigError(std::string(section) + ": expected an object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + (section.empty() ? key : std::string(section) + "." + key) +
                        "'");
    }
  }
}

std::string qualified(std::string_view section, std::string_view key) {
  return std::string(section) + "." + std::string(key);
}

std::optional<double> get_number(const json& obj, std::string_view section, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(qualified(section, key) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(qualified(section, key) + ": must be finite");
  return x;
}

double require_number(const json& obj, std::string_view section, const char* key) {
  auto v = get_number(obj, section, key);
  if (!v) throw ConfigError(qualified(section, key) + ": missing required key");
  return *v;
}

std::optional<std::size_t> get_count(const json& obj, std::string_view section, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ConfigError(qualified(section, key) + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

std::optional<std::string> get_string(const json& obj, std::string_view section, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(qualified(section, key) + ": expected a string");
  return v.get<std::string>();
}

void positive(double x, const std::string& name) {
  if (!(x > 0.0)) throw ConfigError(name + ": must be positive");
}

void parse_params(const json& p, PendulumParams& params) {
  constexpr std::string_view s = "params";
  reject_unknown(p, s,
                 {"d_m", "l_m", "mass_kg", "alpha0_m3", "omega0_rad_s", "beta", "include_gravity"});
  params.d = require_number(p, s, "d_m");
  params.l = require_number(p, s, "l_m");
  params.mass = require_number(p, s, "mass_kg");
  params.atom.alpha0 = require_number(p, s, "alpha0_m3");
  params.atom.omega0 = require_number(p, s, "omega0_rad_s");
  params.beta = get_number(p, s, "beta").value_or(2.0);
  if (p.contains("include_gravity")) {
    if (!p.at("include_gravity").is_boolean()) {
      throw ConfigError("params.include_gravity: expected true or false");
    }
    params.include_gravity = p.at("include_gravity").get<bool>();
  } else {
    params.include_gravity = true;
  }

  positive(params.l, "params.l_m");
  positive(params.mass, "params.mass_kg");
  positive(params.atom.alpha0, "params.alpha0_m3");
  positive(params.atom.omega0, "params.omega0_rad_s");
  if (!(params.d > params.l)) throw ConfigError("params.d_m: must exceed params.l_m");
  if (!(params.beta >= 1.0 && params.beta <= 2.0)) {
    throw ConfigError("params.beta: must lie in [1, 2]");
  }
}

void parse_integrator(const json& g, RunConfig& config) {
  constexpr std::string_view s = "integrator";
  reject_unknown(g, s,
                 {"method", "dt_s", "rel_tol", "abs_tol", "t_max_s", "t_max_periods", "max_steps",
                  "record_stride"});
  IntegratorConfig& ic = config.integrator;
  if (auto m = get_string(g, s, "method")) {
    if (*m == "rk4") {
      ic.method = Method::RK4Fixed;
    } else if (*m == "rk45") {
      ic.method = Method::RK45Adaptive;
    } else {
      throw ConfigError("integrator.method: expected \"rk4\" or \"rk45\"");
    }
  }
  ic.dt = get_number(g, s, "dt_s").value_or(0.0);
  ic.rel_tol = get_number(g, s, "rel_tol").value_or(ic.rel_tol);
  ic.abs_tol = get_number(g, s, "abs_tol").value_or(ic.abs_tol);
  ic.max_steps = get_count(g, s, "max_steps").value_or(ic.max_steps);
  ic.record_stride = get_count(g, s, "record_stride").value_or(ic.record_stride);

  config.t_max_s = get_number(g, s, "t_max_s");
  config.t_max_periods = get_number(g, s, "t_max_periods");
  if (config.t_max_s && config.t_max_periods) {
    throw ConfigError("integrator.t_max_s: give either t_max_s or t_max_periods, not both");
  }
  if (!config.t_max_s && !config.t_max_periods) config.t_max_periods = 10.0;
  if (config.t_max_s) positive(*config.t_max_s, "integrator.t_max_s");
  if (config.t_max_periods) positive(*config.t_max_periods, "integrator.t_max_periods");

  if (ic.method == Method::RK4Fixed) {
    if (!g.contains("dt_s")) throw ConfigError("integrator.dt_s: required for method rk4");
    positive(ic.dt, "integrator.dt_s");
  } else {
    positive(ic.rel_tol, "integrator.rel_tol");
    positive(ic.abs_tol, "integrator.abs_tol");
  }
}

void write_json(std::ostream& out, const ordered_json& v, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent >= 0) out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << ordered_json(key).dump() << (indent >= 0 ? ": " : ":");
        write_json(out, item, indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        newline(depth + 1);
        write_json(out, v[i], indent, depth + 1);
      }
      newline(depth);
      out << ']';
      return;
    }
    case ordered_json::value_t::number_float: {
      const double x = v.get<double>();
      out << (std::isfinite(x) ? format_number(x) : "null");
      return;
    }
    default:
      out << v.dump();
  }
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

RunConfig parse_config(const json& doc) {
  reject_unknown(doc, "", {"params", "initial", "integrator", "validation", "outputs"});
  RunConfig config;
  if (!doc.contains("params")) throw ConfigError("params: missing required section");
  parse_params(doc.at("params"), config.params);

  if (doc.contains("initial")) {
    const json& init = doc.at("initial");
    reject_unknown(init, "initial", {"phi0_rad", "phi_dot0_rad_s"});
    config.phi0 = get_number(init, "initial", "phi0_rad").value_or(config.phi0);
    config.phi_dot0 = get_number(init, "initial", "phi_dot0_rad_s").value_or(0.0);
    if (!(std::abs(config.phi0) < std::numbers::pi / 2)) {
      throw ConfigError("initial.phi0_rad: |phi0| must be below pi/2");
    }
  }

  if (doc.contains("integrator")) parse_integrator(doc.at("integrator"), config);

  if (doc.contains("validation")) {
    const json& v = doc.at("validation");
    reject_unknown(v, "validation", {"regime_margin"});
    config.regime_margin = get_number(v, "validation", "regime_margin").value_or(config.regime_margin);
    if (!(config.regime_margin >= 1.0)) {
      throw ConfigError("validation.regime_margin: must be >= 1");
    }
  }

  if (doc.contains("outputs")) {
    const json& o = doc.at("outputs");
    reject_unknown(o, "outputs", {"trajectory_csv", "report_json"});
    config.trajectory_csv = get_string(o, "outputs", "trajectory_csv");
    config.report_json = get_string(o, "outputs", "report_json");
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: invalid JSON in '" + path.string() + "': " + e.what());
  }
  return parse_config(doc);
}

ordered_json params_to_json(const PendulumParams& params) {
  return ordered_json{{"d_m", params.d},
                      {"l_m", params.l},
                      {"mass_kg", params.mass},
                      {"alpha0_m3", params.atom.alpha0},
                      {"omega0_rad_s", params.atom.omega0},
                      {"beta", params.beta},
                      {"include_gravity", params.include_gravity}};
}

ordered_json to_json(const RunConfig& config) {
  ordered_json doc;
  doc["params"] = params_to_json(config.params);
  doc["initial"] = {{"phi0_rad", config.phi0}, {"phi_dot0_rad_s", config.phi_dot0}};

  const IntegratorConfig& ic = config.integrator;
  ordered_json integ;
  integ["method"] = std::string(to_string(ic.method));
  if (ic.method == Method::RK4Fixed) integ["dt_s"] = ic.dt;
  integ["rel_tol"] = ic.rel_tol;
  integ["abs_tol"] = ic.abs_tol;
  if (config.t_max_s) integ["t_max_s"] = *config.t_max_s;
  if (config.t_max_periods) integ["t_max_periods"] = *config.t_max_periods;
  integ["max_steps"] = ic.max_steps;
  integ["record_stride"] = ic.record_stride;
  doc["integrator"] = integ;

  doc["validation"] = {{"regime_margin", config.regime_margin}};
  ordered_json outputs = ordered_json::object();
  if (config.trajectory_csv) outputs["trajectory_csv"] = *config.trajectory_csv;
  if (config.report_json) outputs["report_json"] = *config.report_json;
  doc["outputs"] = outputs;
  return doc;
}

std::optional<std::string_view> preset_document(std::string_view name) {
  if (name == "paper-defaults") return kPaperDefaults;
  return std::nullopt;
}

IntegratorConfig resolved_integrator(const RunConfig& config) {
  IntegratorConfig ic = config.integrator;
  ic.t_max = config.t_max_s ? *config.t_max_s
                            : *config.t_max_periods * linear_period(config.params);
  return ic;
}

SimulationReport run_simulation(const RunConfig& config, Trajectory* trajectory_out) {
  const PendulumParams& params = config.params;
  SimulationReport report{};
  report.validity = validate(params, config.phi0, config.regime_margin);
  report.analytic_omega_rad_s = linear_omega(params);
  report.analytic_period_s = linear_period(params);

  Trajectory traj =
      integrate(params, State{0.0, config.phi0, config.phi_dot0}, resolved_integrator(config));
  report.termination = traj.termination;
  report.energy_drift = energy_drift(traj);
  try {
    report.simulated_period_s = estimate_period(traj).mean_period;
    report.period_rel_diff = std::abs(*report.simulated_period_s - report.analytic_period_s) /
                             report.analytic_period_s;
  } catch (const InsufficientDataError&) {
  }
  if (trajectory_out) *trajectory_out = std::move(traj);
  return report;
}

ordered_json to_json(const ValidityReport& r) {
  return ordered_json{{"near_zone_ok", r.near_zone_ok},
                      {"near_zone_ratio", r.near_zone_ratio},
                      {"gravity_negligible", r.gravity_negligible},
                      {"gravity_ratio", r.gravity_ratio},
                      {"geometry_ok", r.geometry_ok},
                      {"small_angle_ok", r.small_angle_ok},
                      {"verdict", r.verdict}};
}

ordered_json to_json(const SimulationReport& r) {
  return ordered_json{{"analytic_omega_rad_s", r.analytic_omega_rad_s},
                      {"analytic_period_s", r.analytic_period_s},
                      {"simulated_period_s", optional_number(r.simulated_period_s)},
                      {"period_rel_diff", optional_number(r.period_rel_diff)},
                      {"energy_drift", r.energy_drift},
                      {"validity", to_json(r.validity)},
                      {"termination", std::string(to_string(r.termination))}};
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

std::string dump_json(const ordered_json& doc, int indent) {
  std::ostringstream out;
  write_json(out, doc, indent, 0);
  out << '\n';
  return out.str();
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t_s,phi_rad,phi_dot_rad_s,R_m,energy_J\n";
  for (const auto& s : traj.samples) {
    out << format_number(s.t) << ',' << format_number(s.phi) << ',' << format_number(s.phi_dot)
        << ',' << format_number(s.R) << ',' << format_number(s.energy) << '\n';
  }
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  if (std::find(std::begin(kSweepParams), std::end(kSweepParams), spec.param) ==
      std::end(kSweepParams)) {
    throw ConfigError("--param: unknown parameter '" + spec.param + "'");
  }
  if (spec.points < 2) throw ConfigError("--points: must be >= 2");
  if (!(spec.from < spec.to)) throw ConfigError("--from: must be less than --to");
  if (spec.scale == SweepScale::Log && !(spec.from > 0.0)) {
    throw ConfigError("--from: must be positive for a log sweep");
  }
  std::vector<double> values(static_cast<std::size_t>(spec.points));
  const double last = spec.points - 1;
  for (int i = 0; i < spec.points; ++i) {
    const double f = i / last;
    values[i] = spec.scale == SweepScale::Linear
                    ? spec.from + f * (spec.to - spec.from)
                    : std::exp(std::log(spec.from) + f * (std::log(spec.to) - std::log(spec.from)));
  }
  values.front() = spec.from;
  values.back() = spec.to;
  return values;
}

namespace {

void set_param(RunConfig& config, std::string_view name, double value) {
  PendulumParams& p = config.params;
  if (name == "d_m") p.d = value;
  else if (name == "l_m") p.l = value;
  else if (name == "mass_kg") p.mass = value;
  else if (name == "alpha0_m3") p.atom.alpha0 = value;
  else if (name == "omega0_rad_s") p.atom.omega0 = value;
  else if (name == "beta") p.beta = value;
  else if (name == "phi0_rad") config.phi0 = value;
}

SweepRow evaluate_point(RunConfig config, std::string_view param, double value) {
  set_param(config, param, value);
  SweepRow row{value, std::nullopt, std::nullopt, false};
  try {
    config.params.validated();
  } catch (const DomainError&) {
    return row;
  }
  row.t_analytic = linear_period(config.params);
  if (!(std::abs(config.phi0) < std::numbers::pi / 2)) return row;
  row.verdict = validate(config.params, config.phi0, config.regime_margin).verdict;
  if (!row.verdict) return row;

  const Trajectory traj = integrate(config.params, State{0.0, config.phi0, config.phi_dot0},
                                    resolved_integrator(config));
  if (traj.termination == Termination::Completed) {
    try {
      row.t_simulated = estimate_period(traj).mean_period;
    } catch (const InsufficientDataError&) {
    }
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepSpec& spec, unsigned threads) {
  const std::vector<double> values = sweep_values(spec);
  std::vector<SweepRow> rows(values.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(values.size()));

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) {
          rows[i] = evaluate_point(base, spec.param, values[i]);
        }
      });
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param_value,T_analytic_s,T_simulated_s,validity_verdict\n";
  for (const auto& r : rows) {
    out << format_number(r.value) << ',' << (r.t_analytic ? format_number(*r.t_analytic) : "")
        << ',' << (r.t_simulated ? format_number(*r.t_simulated) : "") << ','
        << (r.verdict ? "true" : "false") << '\n';
  }
}

}  // namespace casimir
