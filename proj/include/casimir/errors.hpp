#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the physical domain of an operation (R <= 0, beta outside [1, 2], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The pendulum left the valid geometry (|phi| >= pi/2 or the tip reached the plate).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough zero crossings in a trajectory to measure a period.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
