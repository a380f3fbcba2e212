#include "casimir/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "casimir/analytic.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

using Vec2 = std::array<double, 2>;

Vec2 axpy(const Vec2& y, double h, const Vec2& k) { return {y[0] + h * k[0], y[1] + h * k[1]}; }

// Equation of motion in tau = omega_ref t with y = (phi, phi_dot / omega_ref):
//   phi'' = -sin(phi) * (1 / rho^4 + gamma),
// rho = R / (d - l) = 1 + (l / (d - l)) (1 - cos phi) and gamma the gravity to
// Casimir coefficient ratio. omega_ref^2 is exactly the Casimir stiffness / I.
class ScaledSystem {
 public:
  explicit ScaledSystem(const PendulumParams& params)
      : omega_ref_(linear_omega(params)),
        lever_(params.l / (params.d - params.l)),
        gamma_(params.include_gravity
                   ? gravity_torque_coefficient(params) / casimir_torque_coefficient(params)
                   : 0.0) {}

  double omega_ref() const { return omega_ref_; }

  Vec2 operator()(const Vec2& y) const {
    const double phi = y[0];
    if (!(std::abs(phi) < std::numbers::pi / 2)) {
      throw GeometryError("integrator: stage left |phi| < pi/2");
    }
    const double half_sin = std::sin(0.5 * phi);
    const double rho = 1.0 + lever_ * 2.0 * half_sin * half_sin;
    const double rho2 = rho * rho;
    return {y[1], -std::sin(phi) * (1.0 / (rho2 * rho2) + gamma_)};
  }

  Vec2 to_scaled(const State& s) const { return {s.phi, s.phi_dot / omega_ref_}; }

 private:
  double omega_ref_;
  double lever_;
  double gamma_;
};

Vec2 rk4(const ScaledSystem& f, const Vec2& y, double h) {
  const Vec2 k1 = f(y);
  const Vec2 k2 = f(axpy(y, 0.5 * h, k1));
  const Vec2 k3 = f(axpy(y, 0.5 * h, k2));
  const Vec2 k4 = f(axpy(y, h, k3));
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

// Dormand-Prince 5(4) tableau.
namespace dp {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b_hat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace dp

struct DopriStep {
  Vec2 y;
  Vec2 k_last;  // f(y), reused as the first stage of the next step
  double error;
};

DopriStep dopri(const ScaledSystem& f, const Vec2& y, const Vec2& k1, double h, double rel_tol,
                double abs_tol) {
  using namespace dp;
  auto stage = [&](std::initializer_list<std::pair<double, const Vec2*>> terms) {
    Vec2 out = y;
    for (const auto& [a, k] : terms) {
      out[0] += h * a * (*k)[0];
      out[1] += h * a * (*k)[1];
    }
    return out;
  };
  const Vec2 k2 = f(stage({{a21, &k1}}));
  const Vec2 k3 = f(stage({{a31, &k1}, {a32, &k2}}));
  const Vec2 k4 = f(stage({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const Vec2 k5 = f(stage({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const Vec2 k6 = f(stage({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  const Vec2 y_new = stage({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  const Vec2 k7 = f(y_new);

  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double err_i =
        h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
    sum += (err_i / scale) * (err_i / scale);
  }
  return {y_new, k7, std::sqrt(sum / 2.0)};
}

class Recorder {
 public:
  Recorder(const PendulumParams& params, const ScaledSystem& sys, std::size_t stride)
      : params_(params), sys_(sys), stride_(stride) {}

  void record(double t, const Vec2& y) {
    const State s{t, y[0], y[1] * sys_.omega_ref()};
    samples_.push_back({s.t, s.phi, s.phi_dot, tip_distance(s.phi, params_), total_energy(s, params_)});
    last_step_ = steps_;
  }

  void accepted(double t, const Vec2& y) {
    ++steps_;
    if (steps_ % stride_ == 0) record(t, y);
  }

  void finish(double t, const Vec2& y) {
    if (last_step_ != steps_) record(t, y);
  }

  std::size_t steps() const { return steps_; }
  std::vector<Sample> take() { return std::move(samples_); }

 private:
  const PendulumParams& params_;
  const ScaledSystem& sys_;
  std::size_t stride_;
  std::size_t steps_ = 0;
  std::size_t last_step_ = 0;
  std::vector<Sample> samples_;
};

bool outside_geometry(const Vec2& y, const PendulumParams& params) {
  return !(std::abs(y[0]) < std::numbers::pi / 2) || !(tip_distance(y[0], params) > 0.0);
}

Termination run_fixed(const ScaledSystem& sys, const PendulumParams& params, const State& initial,
                      const IntegratorConfig& config, Recorder& rec) {
  Vec2 y = sys.to_scaled(initial);
  double t = initial.t;
  for (std::size_t k = 1; t < config.t_max; ++k) {
    if (rec.steps() >= config.max_steps) {
      rec.finish(t, y);
      return Termination::StepLimit;
    }
    const double t_next = std::min(initial.t + static_cast<double>(k) * config.dt, config.t_max);
    Vec2 y_next;
    try {
      y_next = rk4(sys, y, (t_next - t) * sys.omega_ref());
    } catch (const GeometryError&) {
      rec.finish(t, y);
      return Termination::Collision;
    }
    if (outside_geometry(y_next, params)) {
      rec.finish(t, y);
      return Termination::Collision;
    }
    y = y_next;
    t = t_next;
    rec.accepted(t, y);
  }
  rec.finish(t, y);
  return Termination::Completed;
}

Termination run_adaptive(const ScaledSystem& sys, const PendulumParams& params,
                         const State& initial, const IntegratorConfig& config, Recorder& rec) {
  constexpr double kMaxStep = 1.0;  // dimensionless, about a sixth of a period
  const double omega = sys.omega_ref();
  const double tau_end = (config.t_max - initial.t) * omega;

  Vec2 y = sys.to_scaled(initial);
  Vec2 k1 = sys(y);
  double tau = 0.0;
  double t = initial.t;
  double h = std::min({1e-2, kMaxStep, tau_end});

  while (tau < tau_end) {
    if (rec.steps() >= config.max_steps) {
      rec.finish(t, y);
      return Termination::StepLimit;
    }
    const bool last = tau + h >= tau_end;
    const double step = last ? tau_end - tau : h;
    DopriStep trial;
    try {
      trial = dopri(sys, y, k1, step, config.rel_tol, config.abs_tol);
    } catch (const GeometryError&) {
      h = 0.1 * step;
      if (h <= 1e-15 * std::max(1.0, tau)) {
        rec.finish(t, y);
        return Termination::Collision;
      }
      continue;
    }

    const double factor =
        trial.error == 0.0 ? 10.0 : std::clamp(0.9 * std::pow(trial.error, -0.2), 0.1, 10.0);
    if (trial.error > 1.0) {
      h = step * factor;
      continue;
    }
    if (outside_geometry(trial.y, params)) {
      rec.finish(t, y);
      return Termination::Collision;
    }
    y = trial.y;
    k1 = trial.k_last;
    tau = last ? tau_end : tau + step;
    t = last ? config.t_max : initial.t + tau / omega;
    rec.accepted(t, y);
    h = std::min(step * factor, kMaxStep);
  }
  rec.finish(t, y);
  return Termination::Completed;
}

}  // namespace

const IntegratorConfig& IntegratorConfig::validated() const {
  if (method == Method::RK4Fixed && !(dt > 0.0)) throw DomainError("dt must be positive");
  if (method == Method::RK45Adaptive && !(rel_tol > 0.0 && abs_tol > 0.0)) {
    throw DomainError("rel_tol and abs_tol must be positive");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  if (record_stride < 1) throw DomainError("record_stride must be >= 1");
  return *this;
}

std::string_view to_string(Termination termination) noexcept {
  switch (termination) {
    case Termination::Completed:
      return "Completed";
    case Termination::Collision:
      return "Collision";
    case Termination::StepLimit:
      return "StepLimit";
  }
  return "Unknown";
}

std::string_view to_string(Method method) noexcept {
  return method == Method::RK4Fixed ? "rk4" : "rk45";
}

Trajectory integrate(const PendulumParams& params, const State& initial,
                     const IntegratorConfig& config) {
  params.validated();
  config.validated();
  if (!(std::abs(initial.phi) < std::numbers::pi / 2) || !std::isfinite(initial.phi_dot)) {
    throw GeometryError("integrate: initial state must satisfy |phi| < pi/2");
  }
  if (!(config.t_max > initial.t)) throw DomainError("t_max must exceed the initial time");

  const ScaledSystem sys(params);
  Recorder rec(params, sys, config.record_stride);
  rec.record(initial.t, sys.to_scaled(initial));

  const Termination termination = config.method == Method::RK4Fixed
                                      ? run_fixed(sys, params, initial, config, rec)
                                      : run_adaptive(sys, params, initial, config, rec);
  return Trajectory{rec.take(), params, termination};
}

State step_rk4(const State& state, const PendulumParams& params, double dt) {
  if (!(dt > 0.0)) throw DomainError("step_rk4: dt must be positive");
  const ScaledSystem sys(params);
  Vec2 y;
  try {
    y = rk4(sys, sys.to_scaled(state), dt * sys.omega_ref());
  } catch (const GeometryError&) {
    throw GeometryError("step_rk4: collision during step");
  }
  return {state.t + dt, y[0], y[1] * sys.omega_ref()};
}

PeriodEstimate estimate_period(const Trajectory& traj) {
  std::vector<double> crossings;
  const auto& s = traj.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].phi > 0.0 && s[i + 1].phi <= 0.0) {
      const double frac = s[i].phi / (s[i].phi - s[i + 1].phi);
      crossings.push_back(s[i].t + frac * (s[i + 1].t - s[i].t));
    }
  }
  if (crossings.size() < 2) {
    throw InsufficientDataError("estimate_period: need at least two downward zero crossings");
  }
  std::vector<double> periods;
  periods.reserve(crossings.size() - 1);
  for (std::size_t i = 1; i < crossings.size(); ++i) periods.push_back(crossings[i] - crossings[i - 1]);
  const double mean = std::accumulate(periods.begin(), periods.end(), 0.0) /
                      static_cast<double>(periods.size());
  return {mean, periods, periods.size()};
}

double energy_drift(const Trajectory& traj) {
  if (traj.samples.empty()) return 0.0;
  const double e0 = traj.samples.front().energy;
  double worst = 0.0;
  for (const auto& s : traj.samples) worst = std::max(worst, std::abs(s.energy - e0));
  return e0 == 0.0 ? worst : worst / std::abs(e0);
}

}  // namespace casimir
