#include "casimir/estimation.hpp"

#include "casimir/analytic.hpp"
#include "casimir/errors.hpp"
#include "test_support.hpp"

namespace casimir {
namespace {

NanostringSpec chain(int n, double radius, double weight) {
  NanostringSpec s;
  s.n_atoms = n;
  s.atom_radius = radius;
  s.atomic_weight = weight;
  return s;
}

TEST(EstimateParams, ThirtyAtomChain) {
  const PendulumParams p = estimate_params(chain(30, 1e-10, 60.22), 1e-8);
  EXPECT_REL(p.l, 9e-9, 1e-15);
  EXPECT_REL(p.d, 1.9e-8, 1e-15);
  EXPECT_REL(p.mass, 3.0e-24, 1e-14);
  EXPECT_EQ(p.atom.alpha0, 1e-30);
  EXPECT_EQ(p.atom.omega0, 1e15);
  EXPECT_EQ(p.beta, 2.0);
  EXPECT_TRUE(p.include_gravity);
}

TEST(EstimateParams, AtomMassFromAvogadro) {
  const PendulumParams p = estimate_params(chain(2, 1e-10, 60.22), 1e-8);
  EXPECT_REL(p.mass / 2, 1.0e-25, 1e-14);
}

TEST(EstimateParams, TwoAtomChain) {
  const PendulumParams p = estimate_params(chain(2, 1e-10, 1.0), 1e-8);
  EXPECT_REL(p.l, 6e-10, 1e-15);
}

TEST(EstimateParams, OverridesAtomData) {
  NanostringSpec s = chain(30, 1e-10, 60.22);
  s.alpha0 = 2e-30;
  s.omega0 = 3e15;
  const PendulumParams p = estimate_params(s, 1e-8);
  EXPECT_EQ(p.atom.alpha0, 2e-30);
  EXPECT_EQ(p.atom.omega0, 3e15);
}

TEST(EstimateParams, Homogeneous) {
  testing::LogUniform radius(1e-11, 1e-9);
  testing::LogUniform weight(1.0, 300.0, 11u);
  for (int i = 0; i < 200; ++i) {
    const double r = radius();
    const double w = weight();
    const auto base = estimate_params(chain(30, r, w), 1e-8);
    EXPECT_EQ(estimate_params(chain(30, 2 * r, w), 1e-8).l, 2 * base.l);
    EXPECT_EQ(estimate_params(chain(30, r, 2 * w), 1e-8).mass, 2 * base.mass);
  }
}

TEST(EstimateParams, RejectsInvalidSpec) {
  EXPECT_THROW(estimate_params(chain(1, 1e-10, 60.0), 1e-8), DomainError);
  EXPECT_THROW(estimate_params(chain(30, 0.0, 60.0), 1e-8), DomainError);
  EXPECT_THROW(estimate_params(chain(30, 1e-10, -1.0), 1e-8), DomainError);
  EXPECT_THROW(estimate_params(chain(30, 1e-10, 60.0), 0.0), DomainError);
}

TEST(EstimateParams, PeriodOfEstimatedStringIsOrderTenthMicrosecond) {
  const double T = linear_period(estimate_params(chain(30, 1e-10, 60.22), 1e-8));
  EXPECT_GT(T, 1e-7);
  EXPECT_LT(T, 1e-6);
}

TEST(Validate, PaperDefaultsPassEveryCheck) {
  const ValidityReport r = validate(paper_defaults(), 1e-3, 10.0);
  EXPECT_TRUE(r.near_zone_ok);
  EXPECT_NEAR(r.near_zone_ratio, 30.0, 0.05);
  EXPECT_TRUE(r.gravity_negligible);
  EXPECT_REL(r.gravity_ratio, 1.925431795884126e5, 1e-12);
  EXPECT_TRUE(r.geometry_ok);
  EXPECT_TRUE(r.small_angle_ok);
  EXPECT_TRUE(r.verdict);
}

TEST(Validate, FarPivotLeavesNearZone) {
  PendulumParams p = paper_defaults();
  p.d = 5e-7;
  const ValidityReport r = validate(p, 1e-3, 10.0);
  EXPECT_FALSE(r.near_zone_ok);
  EXPECT_FALSE(r.verdict);
}

TEST(Validate, LowTransitionFrequency) {
  PendulumParams p = paper_defaults();
  p.atom.omega0 = 1e13;
  const ValidityReport r = validate(p, 1e-3, 10.0);
  EXPECT_TRUE(r.near_zone_ok);
  EXPECT_REL(r.near_zone_ratio, 2.99792458e-5 / tip_distance(1e-3, p), 1e-14);
  EXPECT_NEAR(r.near_zone_ratio, 3000.0, 5.0);
}

TEST(Validate, HeavyStringIsGravityDominated) {
  PendulumParams p = paper_defaults();
  p.mass = 1e-18;
  const ValidityReport r = validate(p, 1e-3, 10.0);
  EXPECT_FALSE(r.gravity_negligible);
  EXPECT_LT(r.gravity_ratio, 100.0);
  EXPECT_FALSE(r.verdict);
}

TEST(Validate, GeometryAndAmplitude) {
  PendulumParams p = paper_defaults();
  p.d = p.l + 1.5e-10;
  EXPECT_FALSE(validate(p, 1e-3).geometry_ok);
  p.d = p.l + 2e-10;
  EXPECT_TRUE(validate(p, 1e-3).geometry_ok);
  p.d = p.l / 2;
  EXPECT_NO_THROW(validate(p, 1e-3));
  EXPECT_FALSE(validate(p, 1e-3).geometry_ok);

  EXPECT_TRUE(validate(paper_defaults(), 0.3).small_angle_ok);
  EXPECT_FALSE(validate(paper_defaults(), 0.31).small_angle_ok);
  EXPECT_FALSE(validate(paper_defaults(), -0.31).small_angle_ok);
  EXPECT_TRUE(validate(paper_defaults(), 0.0).verdict);
}

TEST(Validate, VerdictMonotoneInMargin) {
  PendulumParams p = paper_defaults();
  for (double d : {1.2e-8, 2e-8, 3e-8, 4e-8, 8e-8}) {
    p.d = d;
    for (double margin = 1.0; margin <= 60.0; margin += 0.5) {
      if (validate(p, 0.1, margin + 0.5).verdict) {
        EXPECT_TRUE(validate(p, 0.1, margin).verdict) << "d = " << d << ", margin = " << margin;
      }
    }
  }
}

}  // namespace
}  // namespace casimir
