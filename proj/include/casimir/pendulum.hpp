#pragma once

#include "casimir/cp_force.hpp"

namespace casimir {

/// Rigid nanostring of length l hanging from a pivot at height d above a
/// conducting plate; the polarized atom sits at the free end.
///
/// Invariants (checked by validated()): d > l > 0, M > 0, beta in [1, 2],
/// atom.alpha0 > 0, atom.omega0 > 0.
struct PendulumParams {
  double d;     // pivot-to-plate distance, m
  double l;     // string length, m
  double mass;  // total string mass, kg
  AtomProperties atom;
  double beta = 2.0;
  bool include_gravity = true;

  /// Returns *this, or throws DomainError naming the offending field.
  const PendulumParams& validated() const;

  friend bool operator==(const PendulumParams&, const PendulumParams&) = default;
};

/// d = 2e-8 m, l = 1e-8 m, M = 1e-24 kg, alpha0 = 1e-30 m^3, omega0 = 1e15 1/s,
/// beta = 2, gravity on.
PendulumParams paper_defaults();

struct State {
  double t = 0.0;        // s
  double phi = 0.0;      // rad, from the downward vertical
  double phi_dot = 0.0;  // rad / s

  friend bool operator==(const State&, const State&) = default;
};

struct StateDerivative {
  double dphi;
  double dphi_dot;
};

/// d - l cos(phi): distance from the tip atom to the plate.
double tip_distance(double phi, const PendulumParams& params);

/// M l^2 / 3 (uniform rod about its end).
double moment_of_inertia(const PendulumParams& params);

/// M g l / 2, the magnitude scale of the gravity torque. Independent of
/// include_gravity, which only switches the torque off in the dynamics.
double gravity_torque_coefficient(const PendulumParams& params);

/// 3 (1+beta) hbar omega0 alpha0 l / (32 pi (d-l)^4), the Casimir torque scale at phi = 0.
double casimir_torque_coefficient(const PendulumParams& params);

// Restoring torques, opposite in sign to phi.
double torque_gravity(double phi, const PendulumParams& params);
double torque_casimir(double phi, const PendulumParams& params);

/// (phi_dot, (tau_gravity + tau_casimir) / I). Throws GeometryError for |phi| >= pi/2.
StateDerivative eom_rhs(const State& state, const PendulumParams& params);

/// V(phi) = -M g (l/2) cos(phi) - (1+beta) hbar omega0 alpha0 / (32 pi (d - l cos phi)^3),
/// so that torque == -dV/dphi. Throws GeometryError for |phi| >= pi/2.
double potential_energy(double phi, const PendulumParams& params);

/// I phi_dot^2 / 2 + V(phi).
double total_energy(const State& state, const PendulumParams& params);

}  // namespace casimir
