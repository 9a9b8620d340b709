#include "afflow/support_function.hpp"

#include <cmath>
#include <stdexcept>

#include "afflow/errors.hpp"
#include "afflow/grid.hpp"

namespace afflow {

SupportFunction::SupportFunction(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (!valid_grid_size(samples_.size())) {
    throw std::invalid_argument(
        "support grid size must be a power of two >= " +
        std::to_string(kMinGridSize) + ", got " + std::to_string(samples_.size()));
  }
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    if (!std::isfinite(samples_[j])) throw NonFiniteError(j);
  }
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    if (samples_[j] <= 0.0) throw OriginNotInteriorError(samples_[j], j);
  }
}

double SupportFunction::wrapped(std::ptrdiff_t j) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(samples_.size());
  return samples_[static_cast<std::size_t>(((j % n) + n) % n)];
}

}  // namespace afflow
