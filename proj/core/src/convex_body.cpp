#include "afflow/convex_body.hpp"

#include <cmath>
#include <stdexcept>

#include "afflow/errors.hpp"
#include "afflow/grid.hpp"
#include "afflow/spectral.hpp"

namespace afflow {

ConvexBody::ConvexBody(SupportFunction support, double radius_floor)
    : support_(std::move(support)), radius_floor_(radius_floor) {
  if (!(radius_floor > 0.0) || !std::isfinite(radius_floor)) {
    throw std::invalid_argument("radius floor must be positive and finite");
  }

  const auto s = support_.samples();
  const std::size_t n = s.size();

  radius_ = spectral_derivative(s, 2);
  std::size_t min_index = 0;
  for (std::size_t j = 0; j < n; ++j) {
    radius_[j] += s[j];
    if (radius_[j] < radius_[min_index]) min_index = j;
  }
  min_radius_ = radius_[min_index];
  if (!(min_radius_ > radius_floor_)) {
    throw NonConvexError(min_radius_, min_index);
  }

  sigma_.resize(n);
  density_.resize(n);
  double area2 = 0.0;    // ∮ s r dθ
  double polar2 = 0.0;   // ∮ s^-2 dθ
  double omega1 = 0.0;   // ∮ g dθ
  double omega2 = 0.0;   // ∮ g / sqrt(σ) dθ
  sigma_min_ = sigma_max_ = s[0] * std::cbrt(radius_[0]);
  for (std::size_t j = 0; j < n; ++j) {
    const double root = std::cbrt(radius_[j]);
    sigma_[j] = s[j] * root;
    density_[j] = root * root;
    if (sigma_[j] < sigma_min_) sigma_min_ = sigma_[j];
    if (sigma_[j] > sigma_max_) sigma_max_ = sigma_[j];
    area2 += s[j] * radius_[j];
    polar2 += 1.0 / (s[j] * s[j]);
    omega1 += density_[j];
    omega2 += density_[j] / std::sqrt(sigma_[j]);
  }
  const double dtheta = kTwoPi / static_cast<double>(n);
  area_ = 0.5 * area2 * dtheta;
  polar_area_ = 0.5 * polar2 * dtheta;
  omega1_ = omega1 * dtheta;
  omega2_ = omega2 * dtheta;
  cache_valid_ = true;
}

ConvexBody ConvexBody::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  std::vector<double> scaled(grid_size());
  const auto s = support_samples();
  for (std::size_t j = 0; j < scaled.size(); ++j) scaled[j] = lambda * s[j];
  return ConvexBody(SupportFunction(std::move(scaled)), radius_floor_);
}

ConvexBody normalize_area(const ConvexBody& body) {
  return body.scaled(std::sqrt(kPi / body.area()));
}

}  // namespace afflow
