#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "casimir/pendulum.hpp"

namespace casimir {

enum class Method { RK4Fixed, RK45Adaptive };

struct IntegratorConfig {
  Method method = Method::RK45Adaptive;
  double dt = 0.0;  // s, fixed-step only
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;  // on the dimensionless state (phi, phi_dot / omega_ref)
  double t_max = 0.0;      // s, absolute end time
  std::size_t max_steps = 10'000'000;
  std::size_t record_stride = 1;

  /// Returns *this, or throws DomainError naming the offending field.
  const IntegratorConfig& validated() const;
};

enum class Termination { Completed, Collision, StepLimit };

std::string_view to_string(Termination termination) noexcept;
std::string_view to_string(Method method) noexcept;

struct Sample {
  double t;        // s
  double phi;      // rad
  double phi_dot;  // rad / s
  double R;        // m
  double energy;   // J

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Trajectory {
  std::vector<Sample> samples;
  PendulumParams params;
  Termination termination = Termination::Completed;
};

struct PeriodEstimate {
  double mean_period;
  std::vector<double> per_cycle_periods;
  std::size_t cycles_observed;
};

/// Integrates the full nonlinear equation of motion from `initial` to
/// config.t_max. The stepper runs in dimensionless time tau = omega_ref t with
/// state (phi, phi_dot / omega_ref), omega_ref = linear_omega(params); samples
/// are stored in SI. Collision and StepLimit are reported through
/// Trajectory::termination rather than thrown.
Trajectory integrate(const PendulumParams& params, const State& initial,
                     const IntegratorConfig& config);

/// One classical RK4 step of size dt. Throws GeometryError if any stage
/// leaves |phi| < pi/2.
State step_rk4(const State& state, const PendulumParams& params, double dt);

/// Mean spacing of downward (phi_dot < 0) zero crossings of phi, located by
/// linear interpolation. Throws InsufficientDataError with fewer than two.
PeriodEstimate estimate_period(const Trajectory& traj);

/// max |E(t) - E(0)| / |E(0)| over the samples (absolute when E(0) == 0).
double energy_drift(const Trajectory& traj);

}  // namespace casimir
