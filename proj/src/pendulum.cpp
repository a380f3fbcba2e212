#include "casimir/pendulum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

void require_geometry(double phi, const char* where) {
  if (!(std::abs(phi) < pi / 2)) {
    throw GeometryError(std::string(where) + ": |phi| must stay below pi/2");
  }
}

// (1+beta) hbar omega0 alpha0 / (32 pi): the Casimir potential strength of the
// combined attraction and restoring force.
double casimir_strength(const PendulumParams& p) {
  return (1.0 + p.beta) * constants().hbar * p.atom.omega0 * p.atom.alpha0 / (32.0 * pi);
}

}  // namespace

const PendulumParams& PendulumParams::validated() const {
  if (!(l > 0.0)) throw DomainError("l must be positive");
  if (!(d > l)) throw DomainError("d must exceed l");
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  if (!(atom.alpha0 > 0.0)) throw DomainError("alpha0 must be positive");
  if (!(atom.omega0 > 0.0)) throw DomainError("omega0 must be positive");
  if (!(beta >= 1.0 && beta <= 2.0)) throw DomainError("beta must lie in [1, 2]");
  if (!std::isfinite(d) || !std::isfinite(mass) || !std::isfinite(atom.alpha0) ||
      !std::isfinite(atom.omega0)) {
    throw DomainError("parameters must be finite");
  }
  return *this;
}

PendulumParams paper_defaults() {
  return PendulumParams{
      .d = 2e-8,
      .l = 1e-8,
      .mass = 1e-24,
      .atom = {.alpha0 = 1e-30, .omega0 = 1e15},
      .beta = 2.0,
      .include_gravity = true,
  };
}

double tip_distance(double phi, const PendulumParams& params) {
  return params.d - params.l * std::cos(phi);
}

double moment_of_inertia(const PendulumParams& params) {
  return params.mass * params.l * params.l / 3.0;
}

double gravity_torque_coefficient(const PendulumParams& params) {
  return params.mass * constants().g_accel * params.l / 2.0;
}

double casimir_torque_coefficient(const PendulumParams& params) {
  const double gap = params.d - params.l;
  const double gap2 = gap * gap;
  return 3.0 * casimir_strength(params) * params.l / (gap2 * gap2);
}

double torque_gravity(double phi, const PendulumParams& params) {
  if (!params.include_gravity) return 0.0;
  return -gravity_torque_coefficient(params) * std::sin(phi);
}

double torque_casimir(double phi, const PendulumParams& params) {
  const double R = tip_distance(phi, params);
  const double R2 = R * R;
  return -3.0 * casimir_strength(params) / (R2 * R2) * params.l * std::sin(phi);
}

StateDerivative eom_rhs(const State& state, const PendulumParams& params) {
  require_geometry(state.phi, "eom_rhs");
  const double torque = torque_gravity(state.phi, params) + torque_casimir(state.phi, params);
  return {state.phi_dot, torque / moment_of_inertia(params)};
}

double potential_energy(double phi, const PendulumParams& params) {
  require_geometry(phi, "potential_energy");
  const double R = tip_distance(phi, params);
  double v = -casimir_strength(params) / (R * R * R);
  if (params.include_gravity) {
    v -= gravity_torque_coefficient(params) * std::cos(phi);
  }
  return v;
}

double total_energy(const State& state, const PendulumParams& params) {
  return 0.5 * moment_of_inertia(params) * state.phi_dot * state.phi_dot +
         potential_energy(state.phi, params);
}

}  // namespace casimir
