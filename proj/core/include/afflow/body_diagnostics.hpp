#pragma once

#include <array>
#include <optional>

#include "afflow/convex_body.hpp"
#include "afflow/linear_map.hpp"

namespace afflow {

/// GL(2)-invariant gradient entropy of the affine support function,
///   (A / (Omega_1 Omega_2^5)) ∮ ((sigma^(-1/4))_s)^2 ds,
/// where (.)_s = g^(-1) d/dtheta. Zero exactly when sigma is constant,
/// i.e. on origin-centered ellipses; strictly positive otherwise.
double entropy_functional(const ConvexBody& body);

/// Deficit in the affine isoperimetric inequality,
/// 1 - Omega_1^3/(8 pi^2 A), clamped at zero. Vanishes (up to
/// discretization) exactly on ellipses.
double ellipticity(const ConvexBody& body);

/// max_j |s^3 r - zeta^3| / zeta^3. When zeta is not supplied it defaults
/// to the grid estimate (mean of s^3 r)^(1/3).
double monge_ampere_residual(const ConvexBody& body,
                             std::optional<double> zeta = std::nullopt);

/// Second moments M = ∫_K x x^T dx via the boundary quadrature
/// M_ij = (1/4) ∮ gamma_i gamma_j s r dtheta, returned as {m11, m12, m22}.
std::array<double, 3> second_moment_matrix(const ConvexBody& body);

/// SL(2) frame that makes the body's second moments isotropic.
struct Frame {
  LinearMap phi;
  std::array<double, 3> moment;  // source-body moments {m11, m12, m22}
};

/// Phi = (det M)^(1/4) M^(-1/2) for the moment matrix M. Throws
/// FrameFailureError when cond(M) exceeds 1e8.
Frame sl2_frame(const ConvexBody& body);

}  // namespace afflow
