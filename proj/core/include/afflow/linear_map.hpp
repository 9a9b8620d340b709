#pragma once

#include <array>

#include "afflow/convex_body.hpp"

namespace afflow {

/// Maps with |det - 1| within this tolerance count as special linear.
inline constexpr double kSpecialDetTolerance = 1e-12;

/// Invertible 2x2 real matrix acting on plane bodies.
class LinearMap {
 public:
  /// Row-major entries; throws std::invalid_argument when the determinant
  /// is zero or any entry is non-finite.
  LinearMap(double a11, double a12, double a21, double a22);

  static LinearMap identity() noexcept;
  static LinearMap diagonal(double a, double b);
  static LinearMap rotation(double angle) noexcept;

  double entry(int row, int col) const noexcept;
  double det() const noexcept { return det_; }
  bool is_special() const noexcept;

  LinearMap inverse() const;
  LinearMap transposed() const noexcept;
  LinearMap operator*(const LinearMap& rhs) const;

  std::array<double, 2> apply(double x, double y) const noexcept;

 private:
  std::array<double, 4> a_;
  double det_;
};

/// Support function of phi(K) resampled on the uniform grid through the
/// trigonometric interpolant:
///   s_{phi K}(theta) = |phi^T z| s_K(arg(phi^T z)),   z = (cos, sin)(theta).
/// The result is re-validated; NonConvexError here signals that the mapped
/// body is under-resolved on the current grid (raise the grid size).
ConvexBody apply_linear_map(const ConvexBody& body, const LinearMap& phi);

}  // namespace afflow
