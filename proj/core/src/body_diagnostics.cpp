#include "afflow/body_diagnostics.hpp"

#include <cmath>
#include <limits>

#include "afflow/errors.hpp"
#include "afflow/functionals.hpp"
#include "afflow/grid.hpp"
#include "afflow/spectral.hpp"

namespace afflow {

double entropy_functional(const ConvexBody& body) {
  const auto sigma = body.affine_support();
  const auto g = body.arclength_density();
  const std::size_t n = sigma.size();

  std::vector<double> q(n);
  for (std::size_t j = 0; j < n; ++j) q[j] = std::pow(sigma[j], -0.25);
  const auto dq = spectral_derivative(q, 1);

  // ∮ (g^-1 dq)^2 g dθ = ∮ dq^2 / g dθ
  std::vector<double> integrand(n);
  for (std::size_t j = 0; j < n; ++j) integrand[j] = dq[j] * dq[j] / g[j];
  const double integral = periodic_integral(integrand);

  const double omega2 = body.omega2();
  return body.area() / (body.affine_perimeter() * std::pow(omega2, 5)) * integral;
}

double ellipticity(const ConvexBody& body) {
  return std::max(0.0, 1.0 - normalized_affine_iso_ratio(body));
}

double monge_ampere_residual(const ConvexBody& body, std::optional<double> zeta) {
  const auto s = body.support_samples();
  const auto r = body.radius_of_curvature();
  const std::size_t n = s.size();

  std::vector<double> w(n);
  double mean = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = s[j] * s[j] * s[j] * r[j];
    mean += w[j];
  }
  mean /= static_cast<double>(n);

  const double z = zeta.value_or(std::cbrt(mean));
  const double z3 = z * z * z;
  double worst = 0.0;
  for (double v : w) worst = std::max(worst, std::abs(v - z3));
  return worst / z3;
}

std::array<double, 3> second_moment_matrix(const ConvexBody& body) {
  const auto s = body.support_samples();
  const auto r = body.radius_of_curvature();
  const std::size_t n = s.size();
  const auto ds = spectral_derivative(s, 1);
  const auto cos_t = grid_cos(n);
  const auto sin_t = grid_sin(n);

  double m11 = 0.0, m12 = 0.0, m22 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double gx = s[j] * cos_t[j] - ds[j] * sin_t[j];
    const double gy = s[j] * sin_t[j] + ds[j] * cos_t[j];
    const double weight = s[j] * r[j];
    m11 += gx * gx * weight;
    m12 += gx * gy * weight;
    m22 += gy * gy * weight;
  }
  const double scale = 0.25 * kTwoPi / static_cast<double>(n);
  return {m11 * scale, m12 * scale, m22 * scale};
}

Frame sl2_frame(const ConvexBody& body) {
  const auto m = second_moment_matrix(body);
  const double m11 = m[0], m12 = m[1], m22 = m[2];

  const double half_trace = 0.5 * (m11 + m22);
  const double disc = std::sqrt(std::max(0.0, 0.25 * (m11 - m22) * (m11 - m22) + m12 * m12));
  const double lam1 = half_trace + disc;
  const double lam2 = half_trace - disc;
  if (!(lam2 > 0.0) || lam1 / lam2 > 1e8) {
    throw FrameFailureError(lam2 > 0.0 ? lam1 / lam2
                                       : std::numeric_limits<double>::infinity());
  }

  // Eigenvector for lam1, guarding against the nearly diagonal case.
  double vx, vy;
  if (std::abs(m12) > 1e-14 * lam1) {
    vx = m12;
    vy = lam1 - m11;
  } else if (m11 >= m22) {
    vx = 1.0;
    vy = 0.0;
  } else {
    vx = 0.0;
    vy = 1.0;
  }
  const double norm = std::hypot(vx, vy);
  vx /= norm;
  vy /= norm;

  // M^{-1/2} = V diag(lam^{-1/2}) V^T, then scale by (det M)^{1/4}.
  const double w1 = 1.0 / std::sqrt(lam1);
  const double w2 = 1.0 / std::sqrt(lam2);
  const double b11 = w1 * vx * vx + w2 * vy * vy;
  const double b12 = (w1 - w2) * vx * vy;
  const double b22 = w1 * vy * vy + w2 * vx * vx;
  const double gain = std::pow(lam1 * lam2, 0.25);

  LinearMap phi(gain * b11, gain * b12, gain * b12, gain * b22);
  // Pin the determinant to one exactly (round-off leaves it ~1e-16 off).
  const double fix = 1.0 / std::sqrt(phi.det());
  phi = LinearMap(fix * phi.entry(0, 0), fix * phi.entry(0, 1),
                  fix * phi.entry(1, 0), fix * phi.entry(1, 1));
  return Frame{phi, m};
}

}  // namespace afflow
