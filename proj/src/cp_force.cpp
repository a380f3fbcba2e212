#include "casimir/cp_force.hpp"

#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

void require_positive_distance(double R, const char* where) {
  if (!(R > 0.0)) {
    throw DomainError(std::string(where) + ": R must be positive");
  }
}

// alpha0 hbar omega0 / (32 pi)
double near_strength(const AtomProperties& atom) {
  return atom.alpha0 * constants().hbar * atom.omega0 / (32.0 * pi);
}

// 3 alpha0 hbar c / (32 pi^2)
double far_strength(const AtomProperties& atom) {
  return 3.0 * atom.alpha0 * constants().hbar * constants().c / (32.0 * pi * pi);
}

}  // namespace

Regime classify_regime(double R, const AtomProperties& atom, double margin) {
  require_positive_distance(R, "classify_regime");
  if (!(margin >= 1.0)) {
    throw DomainError("classify_regime: margin must be >= 1");
  }
  const double crossover = crossover_length(atom.omega0);
  if (R * margin <= crossover) {
    return {Zone::Near, margin};
  }
  if (R >= margin * crossover) {
    return {Zone::Far, margin};
  }
  return {Zone::Intermediate, margin};
}

double potential_near(double R, const AtomProperties& atom) {
  require_positive_distance(R, "potential_near");
  return -near_strength(atom) / (R * R * R);
}

double potential_far(double R, const AtomProperties& atom) {
  require_positive_distance(R, "potential_far");
  const double R2 = R * R;
  return -far_strength(atom) / (R2 * R2);
}

double force_near(double R, const AtomProperties& atom) {
  require_positive_distance(R, "force_near");
  const double R2 = R * R;
  return -3.0 * near_strength(atom) / (R2 * R2);
}

double force_far(double R, const AtomProperties& atom) {
  require_positive_distance(R, "force_far");
  const double R2 = R * R;
  return -4.0 * far_strength(atom) / (R2 * R2 * R);
}

std::optional<double> potential_in_regime(double R, const AtomProperties& atom, double margin) {
  switch (classify_regime(R, atom, margin).zone) {
    case Zone::Near:
      return potential_near(R, atom);
    case Zone::Far:
      return potential_far(R, atom);
    case Zone::Intermediate:
      break;
  }
  return std::nullopt;
}

double total_restoring_factor(double beta) {
  if (!(beta >= 1.0 && beta <= 2.0)) {
    throw DomainError("total_restoring_factor: beta must lie in [1, 2]");
  }
  return 1.0 + beta;
}

}  // namespace casimir
