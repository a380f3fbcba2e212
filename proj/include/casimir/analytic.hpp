#pragma once

#include "casimir/pendulum.hpp"

namespace casimir {

/// Small-angle harmonic solution released from rest at phi0.
struct AnalyticSolution {
  double omega;   // rad / s
  double period;  // s
  double phi0;    // rad
};

// Gravity is dropped regardless of params.include_gravity; the Casimir torque
// dominates it by five orders of magnitude for realistic strings.
double linear_omega(const PendulumParams& params);
double linear_period(const PendulumParams& params);

AnalyticSolution linear_solution(const PendulumParams& params, double phi0);

/// phi(t) = phi0 cos(omega t), phi_dot(t) = -phi0 omega sin(omega t).
State harmonic_state(const PendulumParams& params, double phi0, double t);

}  // namespace casimir
