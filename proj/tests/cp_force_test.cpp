#include "casimir/cp_force.hpp"

#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "test_support.hpp"

namespace casimir {
namespace {

const AtomProperties kAtom{.alpha0 = 1e-30, .omega0 = 1e15};

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  }
  return out;
}

TEST(ClassifyRegime, Examples) {
  EXPECT_EQ(classify_regime(1e-8, kAtom, 10.0).zone, Zone::Near);
  EXPECT_EQ(classify_regime(1e-5, kAtom, 10.0).zone, Zone::Far);
  EXPECT_EQ(classify_regime(1e-7, kAtom, 10.0).zone, Zone::Intermediate);
  EXPECT_EQ(classify_regime(1e-8, kAtom, 10.0).margin, 10.0);
}

TEST(ClassifyRegime, BoundaryResolvesNear) {
  const double R = crossover_length(kAtom.omega0);
  EXPECT_EQ(classify_regime(R, kAtom, 1.0).zone, Zone::Near);
}

TEST(ClassifyRegime, RejectsBadArguments) {
  EXPECT_THROW(classify_regime(0.0, kAtom, 10.0), DomainError);
  EXPECT_THROW(classify_regime(-1e-8, kAtom, 10.0), DomainError);
  EXPECT_THROW(classify_regime(1e-8, kAtom, 0.5), DomainError);
}

TEST(ClassifyRegime, MonotoneInDistance) {
  int stage = 0;  // 0 near, 1 intermediate, 2 far
  for (double R : log_spaced(1e-10, 1e-3, 400)) {
    const Zone z = classify_regime(R, kAtom, 10.0).zone;
    const int s = z == Zone::Near ? 0 : z == Zone::Intermediate ? 1 : 2;
    EXPECT_GE(s, stage) << "R = " << R;
    stage = s;
  }
  EXPECT_EQ(stage, 2);
}

TEST(Potentials, ReferenceValues) {
  // High-precision evaluation of the asymptotic formulas.
  EXPECT_REL(potential_near(1e-8, kAtom), -1.049001984505948e-27, 1e-12);
  EXPECT_REL(potential_far(1e-6, kAtom), -3.003090324481440e-34, 1e-12);
  EXPECT_REL(force_near(1e-8, kAtom), -3.147005953517844e-19, 1e-12);
  EXPECT_REL(force_far(1e-6, kAtom), -1.201236129792576e-27, 1e-12);
  // Rounded anchors.
  EXPECT_REL(potential_near(1e-8, kAtom), -1.0490e-27, 1e-4);
  EXPECT_REL(potential_far(1e-6, kAtom), -3.0031e-34, 1e-4);
  EXPECT_REL(force_near(1e-8, kAtom), -3.1470e-19, 1e-4);
  EXPECT_REL(force_far(1e-6, kAtom), -1.2012e-27, 1e-4);
}

TEST(Potentials, LinearInPolarizability) {
  const AtomProperties none{.alpha0 = 0.0, .omega0 = 1e15};
  EXPECT_EQ(potential_near(1e-8, none), 0.0);
  EXPECT_EQ(potential_far(1e-6, none), 0.0);
}

TEST(Potentials, ExactScalingUnderDoubling) {
  for (double R : log_spaced(1e-10, 1e-4, 25)) {
    EXPECT_REL(potential_near(2 * R, kAtom) / potential_near(R, kAtom), 1.0 / 8, 1e-12);
    EXPECT_REL(potential_far(2 * R, kAtom) / potential_far(R, kAtom), 1.0 / 16, 1e-12);
    EXPECT_REL(force_near(2 * R, kAtom) / force_near(R, kAtom), 1.0 / 16, 1e-12);
    EXPECT_REL(force_far(2 * R, kAtom) / force_far(R, kAtom), 1.0 / 32, 1e-12);
  }
}

TEST(Potentials, NegativeIncreasingAndAttractive) {
  const auto radii = log_spaced(1e-10, 1e-4, 60);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    EXPECT_LT(potential_near(radii[i], kAtom), 0.0);
    EXPECT_LT(potential_far(radii[i], kAtom), 0.0);
    EXPECT_LT(force_near(radii[i], kAtom), 0.0);
    EXPECT_LT(force_far(radii[i], kAtom), 0.0);
    if (i > 0) {
      EXPECT_GT(potential_near(radii[i], kAtom), potential_near(radii[i - 1], kAtom));
      EXPECT_GT(potential_far(radii[i], kAtom), potential_far(radii[i - 1], kAtom));
    }
  }
}

// Central differences with h = 1e-4 R: truncation ~1e-8, rounding ~1e-12.
double minus_derivative(double (*u)(double, const AtomProperties&), double R) {
  const double h = 1e-4 * R;
  return -(u(R + h, kAtom) - u(R - h, kAtom)) / (2 * h);
}

TEST(Forces, MatchFiniteDifferenceOfPotential) {
  EXPECT_REL(force_near(1e-8, kAtom), minus_derivative(potential_near, 1e-8), 1e-6);
  EXPECT_REL(force_far(1e-6, kAtom), minus_derivative(potential_far, 1e-6), 1e-6);
  for (double R : log_spaced(1e-10, 3e-8, 10)) {
    EXPECT_REL(force_near(R, kAtom), minus_derivative(potential_near, R), 1e-6) << R;
  }
  for (double R : log_spaced(3e-6, 1e-3, 10)) {
    EXPECT_REL(force_far(R, kAtom), minus_derivative(potential_far, R), 1e-6) << R;
  }
}

TEST(Forces, RejectNonPositiveDistance) {
  EXPECT_THROW(potential_near(0.0, kAtom), DomainError);
  EXPECT_THROW(potential_far(-1.0, kAtom), DomainError);
  EXPECT_THROW(force_near(0.0, kAtom), DomainError);
  EXPECT_THROW(force_far(0.0, kAtom), DomainError);
}

TEST(PotentialInRegime, RefusesIntermediateZone) {
  EXPECT_EQ(potential_in_regime(1e-8, kAtom), potential_near(1e-8, kAtom));
  EXPECT_EQ(potential_in_regime(1e-5, kAtom), potential_far(1e-5, kAtom));
  EXPECT_FALSE(potential_in_regime(1e-7, kAtom).has_value());
}

TEST(RestoringFactor, Examples) {
  EXPECT_EQ(total_restoring_factor(1.0), 2.0);
  EXPECT_EQ(total_restoring_factor(2.0), 3.0);
  EXPECT_EQ(total_restoring_factor(1.5), 2.5);
}

TEST(RestoringFactor, RejectsOutOfBounds) {
  EXPECT_THROW(total_restoring_factor(0.99), DomainError);
  EXPECT_THROW(total_restoring_factor(2.01), DomainError);
  EXPECT_THROW(total_restoring_factor(std::nan("")), DomainError);
}

}  // namespace
}  // namespace casimir
