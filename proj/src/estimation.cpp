#include "casimir/estimation.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

PendulumParams estimate_params(const NanostringSpec& spec, double gap_R) {
  if (spec.n_atoms < 2) throw DomainError("n_atoms must be >= 2");
  if (!(spec.atom_radius > 0.0)) throw DomainError("atom_radius must be positive");
  if (!(spec.atomic_weight > 0.0)) throw DomainError("atomic_weight must be positive");
  if (!(gap_R > 0.0)) throw DomainError("gap must be positive");

  const double n = static_cast<double>(spec.n_atoms);
  const double length = n * 3.0 * spec.atom_radius;
  const double atom_mass = spec.atomic_weight / 1000.0 / kAvogadro;

  PendulumParams params{
      .d = length + gap_R,
      .l = length,
      .mass = n * atom_mass,
      .atom = {.alpha0 = spec.alpha0.value_or(kDefaultAlpha0),
               .omega0 = spec.omega0.value_or(kDefaultOmega0)},
  };
  return params.validated();
}

ValidityReport validate(const PendulumParams& params, double phi0, double margin) {
  ValidityReport report{};
  const double amplitude = std::abs(phi0);
  const bool ordered = params.l > 0.0 && params.d > params.l;

  const double r_max = tip_distance(amplitude, params);
  const double crossover = params.atom.omega0 > 0.0 ? crossover_length(params.atom.omega0) : 0.0;
  report.near_zone_ratio = r_max > 0.0 ? crossover / r_max : 0.0;
  report.near_zone_ok = r_max > 0.0 && r_max * margin <= crossover;

  const double gravity = gravity_torque_coefficient(params);
  report.gravity_ratio = ordered ? casimir_torque_coefficient(params) / gravity : 0.0;
  report.gravity_negligible = report.gravity_ratio >= kGravityNegligibleRatio;

  report.geometry_ok = ordered && params.d - params.l >= 2.0 * kTypicalAtomRadius;
  report.small_angle_ok = amplitude <= kSmallAngleLimit;
  report.verdict = report.near_zone_ok && report.gravity_negligible && report.geometry_ok &&
                   report.small_angle_ok;
  return report;
}

}  // namespace casimir
