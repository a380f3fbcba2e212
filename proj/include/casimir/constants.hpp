#pragma once

namespace casimir {

/// SI values of the constants the model needs.
struct Constants {
  double hbar;     // J s
  double c;        // m / s
  double g_accel;  // m / s^2
};

/// CODATA 2018 hbar, exact SI c and standard gravity.
constexpr Constants constants() noexcept {
  return Constants{1.054571817e-34, 2.99792458e8, 9.80665};
}

/// Boundary between the near (R << c/omega0) and far (R >> c/omega0) zones.
/// Throws DomainError for omega0 <= 0.
double crossover_length(double omega0);

}  // namespace casimir
