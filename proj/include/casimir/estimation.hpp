#pragma once

#include <optional>

#include "casimir/pendulum.hpp"

namespace casimir {

inline constexpr double kAvogadro = 6.022e23;
inline constexpr double kDefaultAlpha0 = 1e-30;  // m^3, order of an atomic volume
inline constexpr double kDefaultOmega0 = 1e15;   // 1/s, typical transition frequency
inline constexpr double kTypicalAtomRadius = 1e-10;
inline constexpr double kGravityNegligibleRatio = 100.0;
inline constexpr double kSmallAngleLimit = 0.3;

/// Linear monatomic chain with centre-to-centre spacing of three atom radii.
struct NanostringSpec {
  int n_atoms = 30;
  double atom_radius = 1e-10;  // m
  double atomic_weight = 0.0;  // g / mol
  std::optional<double> alpha0;
  std::optional<double> omega0;
};

/// l = 3 n r, M = n (atomic_weight / 1000) / N_A, d = l + gap_R. Not rounded.
PendulumParams estimate_params(const NanostringSpec& spec, double gap_R);

struct ValidityReport {
  bool near_zone_ok;
  double near_zone_ratio;  // (c / omega0) / R(phi0)
  bool gravity_negligible;
  double gravity_ratio;  // Casimir / gravity torque coefficient
  bool geometry_ok;
  bool small_angle_ok;
  bool verdict;
};

/// Checks the configuration against the near-zone, gravity-negligibility,
/// geometry and small-angle assumptions. Reports, never throws for physics.
ValidityReport validate(const PendulumParams& params, double phi0,
                        double margin = kDefaultRegimeMargin);

}  // namespace casimir
