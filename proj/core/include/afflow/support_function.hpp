#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace afflow {

/// Uniform samples s(theta_j), theta_j = 2 pi j / n, of the support
/// function of a plane convex body with the origin in its interior.
/// Construction rejects non-finite samples (NonFiniteError), non-positive
/// samples (OriginNotInteriorError) and grid sizes that are not a power of
/// two >= 64 (std::invalid_argument). Index arithmetic is periodic; full
/// convexity of the represented body is enforced one layer up, by
/// ConvexBody.
class SupportFunction {
 public:
  explicit SupportFunction(std::vector<double> samples);

  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }

  double operator[](std::size_t j) const noexcept { return samples_[j]; }

  /// Sample at any signed index, wrapped mod n.
  double wrapped(std::ptrdiff_t j) const noexcept;

  friend bool operator==(const SupportFunction&, const SupportFunction&) = default;

 private:
  std::vector<double> samples_;
};

}  // namespace afflow
