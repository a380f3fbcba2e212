#include "casimir/analytic.hpp"

#include <cmath>
#include <numbers>

#include "casimir/constants.hpp"

namespace casimir {

double linear_omega(const PendulumParams& params) {
  using std::numbers::pi;
  const double gap = params.d - params.l;
  const double gap2 = gap * gap;
  const double numerator =
      9.0 * (1.0 + params.beta) * constants().hbar * params.atom.omega0 * params.atom.alpha0;
  const double denominator = 32.0 * pi * params.mass * params.l * gap2 * gap2;
  return std::sqrt(numerator / denominator);
}

double linear_period(const PendulumParams& params) {
  return 2.0 * std::numbers::pi / linear_omega(params);
}

AnalyticSolution linear_solution(const PendulumParams& params, double phi0) {
  const double omega = linear_omega(params);
  return {omega, 2.0 * std::numbers::pi / omega, phi0};
}

State harmonic_state(const PendulumParams& params, double phi0, double t) {
  const double omega = linear_omega(params);
  const double phase = omega * t;
  return {t, phi0 * std::cos(phase), -phi0 * omega * std::sin(phase)};
}

}  // namespace casimir
