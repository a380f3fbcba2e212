#include "casimir/constants.hpp"

#include <numbers>

#include "casimir/errors.hpp"
#include "test_support.hpp"

namespace casimir {
namespace {

using testing::LogUniform;

TEST(Constants, DocumentedSiValues) {
  const Constants k = constants();
  EXPECT_EQ(k.c, 2.99792458e8);
  EXPECT_EQ(k.g_accel, 9.80665);
  EXPECT_EQ(k.hbar, 1.054571817e-34);
}

TEST(Constants, HbarIsPlanckOverTwoPi) {
  constexpr double h = 6.62607015e-34;
  EXPECT_REL(constants().hbar, h / (2.0 * std::numbers::pi), 1e-9);
}

TEST(Constants, RepeatedCallsAreIdentical) {
  const Constants a = constants();
  const Constants b = constants();
  EXPECT_EQ(a.hbar, b.hbar);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.g_accel, b.g_accel);
  EXPECT_GT(a.hbar, 0.0);
  EXPECT_GT(a.c, 0.0);
  EXPECT_GT(a.g_accel, 0.0);
}

TEST(CrossoverLength, Examples) {
  EXPECT_REL(crossover_length(1e15), 2.99792458e-7, 1e-15);
  EXPECT_EQ(crossover_length(2.99792458e8), 1.0);
  EXPECT_REL(crossover_length(2e15), 1.49896229e-7, 1e-15);
}

TEST(CrossoverLength, RejectsNonPositiveFrequency) {
  EXPECT_THROW(crossover_length(0.0), DomainError);
  EXPECT_THROW(crossover_length(-1e15), DomainError);
  EXPECT_THROW(crossover_length(std::nan("")), DomainError);
}

TEST(CrossoverLength, InverseScalingProperty) {
  LogUniform omega(1e10, 1e18);
  LogUniform factor(1e-3, 1e3, 7u);
  for (int i = 0; i < 500; ++i) {
    const double w = omega();
    const double k = factor();
    EXPECT_REL(crossover_length(k * w), crossover_length(w) / k, 1e-15);
  }
}

}  // namespace
}  // namespace casimir
