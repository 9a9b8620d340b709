#include "afflow/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "afflow/grid.hpp"

namespace afflow {

double p_affine_perimeter(const ConvexBody& body, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("p-affine perimeter needs p >= 1");
  }
  const double exponent = 1.0 - 3.0 * p / (p + 2.0);
  const auto sigma = body.affine_support();
  const auto g = body.arclength_density();
  double sum = 0.0;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    sum += std::pow(sigma[j], exponent) * g[j];
  }
  return sum * kTwoPi / static_cast<double>(sigma.size());
}

double affine_iso_ratio(const ConvexBody& body, double p) {
  return std::pow(p_affine_perimeter(body, p), 2.0 + p) /
         std::pow(body.area(), 2.0 - p);
}

double normalized_affine_iso_ratio(const ConvexBody& body) {
  const double omega1 = body.affine_perimeter();
  return omega1 * omega1 * omega1 / (8.0 * kPi * kPi * body.area());
}

double santalo_ratio(const ConvexBody& body) {
  return body.area() * body.polar_area() / (kPi * kPi);
}

void FunctionalRecord::validate() const {
  const double values[] = {t,       area,    polar_area, omega1,  omega2,
                           sigma_min, sigma_max, santalo, aff_iso, entropy,
                           harnack_min, dt};
  for (double v : values) {
    if (!std::isfinite(v)) throw std::logic_error("functional record not finite");
  }
  if (sigma_min > sigma_max) throw std::logic_error("sigma_min exceeds sigma_max");
  if (!(area > 0.0) || !(polar_area > 0.0) || !(omega1 > 0.0)) {
    throw std::logic_error("non-positive area functional in record");
  }
}

}  // namespace afflow
