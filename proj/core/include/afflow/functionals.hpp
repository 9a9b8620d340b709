#pragma once

#include "afflow/convex_body.hpp"

namespace afflow {

/// p-affine perimeter, p >= 1:
///   Omega_p = ∮ sigma^(1 - 3p/(p+2)) ds,   ds = r^(2/3) dtheta.
/// Omega_1 is the classical affine perimeter, Omega_2 is scale invariant.
double p_affine_perimeter(const ConvexBody& body, double p);

/// p-affine isoperimetric ratio Omega_p^(2+p) / A^(2-p); GL(2)-invariant.
double affine_iso_ratio(const ConvexBody& body, double p);

/// Omega_1^3 / (8 pi^2 A), in (0, 1] with equality exactly on ellipses.
double normalized_affine_iso_ratio(const ConvexBody& body);

/// A(K) A(K*) / pi^2; equals 1 exactly on origin-centered ellipses.
double santalo_ratio(const ConvexBody& body);

/// One row of monitored scalars along a flow trajectory.
struct FunctionalRecord {
  double t = 0.0;
  double area = 0.0;
  double polar_area = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double santalo = 0.0;      // A A* / pi^2
  double aff_iso = 0.0;      // Omega_1^3 / (8 pi^2 A)
  double entropy = 0.0;      // entropy_functional() of the body
  double harnack_min = 0.0;  // min_j r_j^(-1/3) (t - t0)^(1/4)
  double dt = 0.0;           // step size in force when the row was taken

  /// Everything finite, sigma_min <= sigma_max, positive area terms;
  /// throws std::logic_error otherwise.
  void validate() const;
};

}  // namespace afflow
