#pragma once

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace casimir::testing {

inline double rel_err(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

// Hand-rolled log-uniform generator for property tests; fixed seed.
class LogUniform {
 public:
  LogUniform(double lo, double hi, unsigned seed = 20240611u)
      : rng_(seed), dist_(std::log(lo), std::log(hi)) {}
  double operator()() { return std::exp(dist_(rng_)); }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> dist_;
};

}  // namespace casimir::testing

#define EXPECT_REL(actual, expected, tol) \
  EXPECT_LE(::casimir::testing::rel_err((actual), (expected)), (tol)) << #actual " = " << (actual)
