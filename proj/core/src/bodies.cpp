#include "afflow/bodies.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "afflow/errors.hpp"
#include "afflow/grid.hpp"

namespace afflow {

ConvexBody make_ellipse(double a, double b, double rotation,
                        std::size_t grid_size, double radius_floor) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("ellipse semi-axes must be positive and finite");
  }
  const auto angles = grid_angles(grid_size);
  std::vector<double> s(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double c = std::cos(angles[j] - rotation);
    const double sn = std::sin(angles[j] - rotation);
    s[j] = std::sqrt(a * a * c * c + b * b * sn * sn);
  }
  return ConvexBody(SupportFunction(std::move(s)), radius_floor);
}

namespace {

// Uniform in [-1, 1) from the top 53 bits; fully determined by the seed,
// unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
  const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u01 - 1.0;
}

struct Harmonic {
  int k;
  double cos_coef;
  double sin_coef;
};

}  // namespace

ConvexBody make_random_body(const RandomBodyParams& params,
                            std::size_t grid_size, double radius_floor) {
  if (params.max_harmonic < 2) {
    throw std::invalid_argument("max_harmonic must be at least 2");
  }
  if (!(params.amplitude >= 0.0) || !std::isfinite(params.amplitude)) {
    throw std::invalid_argument("amplitude must be non-negative and finite");
  }

  std::mt19937_64 rng(params.seed);
  std::vector<Harmonic> modes;
  modes.reserve(static_cast<std::size_t>(params.max_harmonic - 1));
  for (int k = 2; k <= params.max_harmonic; ++k) {
    const double scale = params.amplitude * std::pow(static_cast<double>(k), -params.decay);
    const double ak = scale * next_unit(rng);
    const double bk = scale * next_unit(rng);
    modes.push_back({k, ak, bk});
  }

  const auto angles = grid_angles(grid_size);
  std::vector<double> s(grid_size), r(grid_size);
  double shrink = 1.0;
  constexpr double kFitFloor = 0.05;
  for (;;) {
    double min_s = 1.0, min_r = 1.0;
    std::size_t min_s_idx = 0, min_r_idx = 0;
    for (std::size_t j = 0; j < grid_size; ++j) {
      double sj = 1.0, rj = 1.0;
      for (const auto& m : modes) {
        const double wave = m.cos_coef * std::cos(m.k * angles[j]) +
                            m.sin_coef * std::sin(m.k * angles[j]);
        sj += shrink * wave;
        rj += shrink * (1.0 - static_cast<double>(m.k) * m.k) * wave;
      }
      s[j] = sj;
      r[j] = rj;
      if (sj < min_s) { min_s = sj; min_s_idx = j; }
      if (rj < min_r) { min_r = rj; min_r_idx = j; }
    }
    if (min_r >= kFitFloor && min_s >= kFitFloor) break;
    if (!params.halve_to_fit) {
      if (min_r < kFitFloor) throw NonConvexError(min_r, min_r_idx);
      throw OriginNotInteriorError(min_s, min_s_idx);
    }
    shrink *= 0.5;
  }

  return ConvexBody(SupportFunction(std::move(s)), radius_floor);
}

}  // namespace afflow
