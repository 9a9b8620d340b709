#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "afflow/support_function.hpp"

namespace afflow {

/// Floor below which the radius of curvature counts as a convexity
/// failure; keeps cube roots and reciprocals away from round-off garbage.
inline constexpr double kDefaultRadiusFloor = 1e-6;

/// A smooth strictly convex plane body, represented by its support
/// function on the uniform angular grid. Construction validates strict
/// convexity (min radius of curvature above the floor) and precomputes
/// every derived field, so bodies are immutable values that are safe to
/// share across threads.
///
/// Derived arrays:
///   radius_of_curvature   r = s'' + s     (reciprocal boundary curvature)
///   affine_support        sigma = s r^(1/3)
///   arclength_density     g = r^(2/3)     (affine arclength ds = g dtheta)
/// Derived scalars: A, A*, Omega_1, Omega_2, min/max of sigma, min of r.
class ConvexBody {
 public:
  explicit ConvexBody(SupportFunction support,
                      double radius_floor = kDefaultRadiusFloor);

  std::size_t grid_size() const noexcept { return support_.size(); }
  const SupportFunction& support() const noexcept { return support_; }
  std::span<const double> support_samples() const noexcept {
    return support_.samples();
  }

  std::span<const double> radius_of_curvature() const noexcept { return radius_; }
  std::span<const double> affine_support() const noexcept { return sigma_; }
  std::span<const double> arclength_density() const noexcept { return density_; }

  double area() const noexcept { return area_; }              // 1/2 ∮ s r dθ
  double polar_area() const noexcept { return polar_area_; }  // 1/2 ∮ s^-2 dθ
  double affine_perimeter() const noexcept { return omega1_; }  // ∮ r^(2/3) dθ
  double omega2() const noexcept { return omega2_; }  // ∮ σ^(-1/2) r^(2/3) dθ
  double sigma_min() const noexcept { return sigma_min_; }
  double sigma_max() const noexcept { return sigma_max_; }
  double min_radius() const noexcept { return min_radius_; }
  double radius_floor() const noexcept { return radius_floor_; }

  /// Cached fields match recomputation from the support function; always
  /// true for a constructed body (the cache is filled eagerly).
  bool cache_valid() const noexcept { return cache_valid_; }

  /// Dilate about the origin by lambda > 0.
  ConvexBody scaled(double lambda) const;

 private:
  SupportFunction support_;
  double radius_floor_;
  std::vector<double> radius_;
  std::vector<double> sigma_;
  std::vector<double> density_;
  double area_ = 0.0;
  double polar_area_ = 0.0;
  double omega1_ = 0.0;
  double omega2_ = 0.0;
  double sigma_min_ = 0.0;
  double sigma_max_ = 0.0;
  double min_radius_ = 0.0;
  bool cache_valid_ = false;
};

/// The body rescaled about the origin so its area equals pi.
ConvexBody normalize_area(const ConvexBody& body);

}  // namespace afflow
