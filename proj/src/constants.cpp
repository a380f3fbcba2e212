#include "casimir/constants.hpp"

#include "casimir/errors.hpp"

namespace casimir {

double crossover_length(double omega0) {
  if (!(omega0 > 0.0)) {
    throw DomainError("crossover_length: omega0 must be positive");
  }
  return constants().c / omega0;
}

}  // namespace casimir
