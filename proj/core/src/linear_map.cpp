#include "afflow/linear_map.hpp"

#include <cmath>
#include <stdexcept>

#include "afflow/errors.hpp"
#include "afflow/grid.hpp"
#include "afflow/spectral.hpp"

namespace afflow {

LinearMap::LinearMap(double a11, double a12, double a21, double a22)
    : a_{a11, a12, a21, a22}, det_(a11 * a22 - a12 * a21) {
  for (double v : a_) {
    if (!std::isfinite(v)) throw std::invalid_argument("linear map entry not finite");
  }
  if (det_ == 0.0) throw std::invalid_argument("linear map must be invertible");
}

LinearMap LinearMap::identity() noexcept { return LinearMap(1.0, 0.0, 0.0, 1.0); }

LinearMap LinearMap::diagonal(double a, double b) { return LinearMap(a, 0.0, 0.0, b); }

LinearMap LinearMap::rotation(double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return LinearMap(c, -s, s, c);
}

double LinearMap::entry(int row, int col) const noexcept {
  return a_[static_cast<std::size_t>(2 * row + col)];
}

bool LinearMap::is_special() const noexcept {
  return std::abs(det_ - 1.0) <= kSpecialDetTolerance;
}

LinearMap LinearMap::inverse() const {
  return LinearMap(a_[3] / det_, -a_[1] / det_, -a_[2] / det_, a_[0] / det_);
}

LinearMap LinearMap::transposed() const noexcept {
  return LinearMap(a_[0], a_[2], a_[1], a_[3]);
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
  return LinearMap(a_[0] * rhs.a_[0] + a_[1] * rhs.a_[2],
                   a_[0] * rhs.a_[1] + a_[1] * rhs.a_[3],
                   a_[2] * rhs.a_[0] + a_[3] * rhs.a_[2],
                   a_[2] * rhs.a_[1] + a_[3] * rhs.a_[3]);
}

std::array<double, 2> LinearMap::apply(double x, double y) const noexcept {
  return {a_[0] * x + a_[1] * y, a_[2] * x + a_[3] * y};
}

ConvexBody apply_linear_map(const ConvexBody& body, const LinearMap& phi) {
  const std::size_t n = body.grid_size();
  const TrigInterpolant interp(body.support_samples());
  const LinearMap pt = phi.transposed();
  const auto cos_t = grid_cos(n);
  const auto sin_t = grid_sin(n);

  std::vector<double> mapped(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = pt.apply(cos_t[j], sin_t[j]);
    const double norm = std::hypot(w[0], w[1]);
    mapped[j] = norm * interp(std::atan2(w[1], w[0]));
  }
  return ConvexBody(SupportFunction(std::move(mapped)), body.radius_floor());
}

}  // namespace afflow
