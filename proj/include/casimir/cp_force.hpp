#pragma once

#include <optional>

namespace casimir {

/// Static polarizability (m^3, the Gaussian-style "volume" polarizability)
/// and transition angular frequency (1/s) of the polarized tip atom.
struct AtomProperties {
  double alpha0;
  double omega0;

  friend bool operator==(const AtomProperties&, const AtomProperties&) = default;
};

enum class Zone { Near, Far, Intermediate };

struct Regime {
  Zone zone;
  double margin;
};

inline constexpr double kDefaultRegimeMargin = 10.0;

/// Near iff R * margin <= c/omega0, Far iff R >= margin * c/omega0.
Regime classify_regime(double R, const AtomProperties& atom, double margin = kDefaultRegimeMargin);

/// Near-zone potential -alpha0 hbar omega0 / (32 pi R^3).
double potential_near(double R, const AtomProperties& atom);

/// Far-zone (retarded) potential -3 alpha0 hbar c / (32 pi^2 R^4).
double potential_far(double R, const AtomProperties& atom);

// Forces are the signed radial component along increasing R, so attraction
// is negative and force == -dU/dR.
double force_near(double R, const AtomProperties& atom);
double force_far(double R, const AtomProperties& atom);

/// Asymptotic potential for the zone R falls in; nullopt in the intermediate
/// zone, where neither asymptotic form applies.
std::optional<double> potential_in_regime(double R, const AtomProperties& atom,
                                          double margin = kDefaultRegimeMargin);

/// 1 + beta: the static Casimir-Polder force plus the restoring force beta * F_CP.
/// beta must lie in [1, 2].
double total_restoring_factor(double beta);

}  // namespace casimir
