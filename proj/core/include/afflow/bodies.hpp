#pragma once

#include <cstdint>

#include "afflow/convex_body.hpp"
#include "afflow/grid.hpp"

namespace afflow {

/// Origin-centered ellipse with semi-axes a, b, rotated by `rotation`:
///   s(theta) = sqrt(a^2 cos^2(theta - rotation) + b^2 sin^2(theta - rotation)).
ConvexBody make_ellipse(double a, double b, double rotation = 0.0,
                        std::size_t grid_size = kDefaultGridSize,
                        double radius_floor = kDefaultRadiusFloor);

/// PRNG identifier recorded in outputs for reproducibility.
inline constexpr const char* kRandomBodyRngId = "mt19937_64";

struct RandomBodyParams {
  std::uint64_t seed = 1;
  int max_harmonic = 8;   // highest Fourier mode of the perturbation
  double decay = 2.0;     // per-mode scale amplitude * k^(-decay)
  double amplitude = 0.2;
  /// Halving the perturbation until the body is comfortably convex always
  /// terminates (worst case at the disk); with halving off, an infeasible
  /// amplitude throws instead.
  bool halve_to_fit = true;
};

/// Deterministic random perturbation of the unit disk,
///   s = 1 + sum_{k=2..max_harmonic} (a_k cos k theta + b_k sin k theta),
/// with a_k, b_k drawn uniformly from [-amplitude k^-decay, amplitude k^-decay]
/// (mt19937_64, order a_2, b_2, a_3, ...). The perturbation is halved until
/// min r >= 0.05 and min s >= 0.05. Identical parameters give bitwise
/// identical samples at every grid size.
ConvexBody make_random_body(const RandomBodyParams& params,
                            std::size_t grid_size = kDefaultGridSize,
                            double radius_floor = kDefaultRadiusFloor);

}  // namespace afflow
