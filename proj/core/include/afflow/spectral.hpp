#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace afflow {

/// order-th angular derivative of uniformly spaced periodic samples,
/// computed by Fourier differentiation. Exact to round-off for
/// trigonometric polynomials of degree below n/2. order must be 1 or 2;
/// the Nyquist mode is zeroed for order 1. Throws NonFiniteError on
/// NaN/inf input and std::invalid_argument on bad order or odd length.
std::vector<double> spectral_derivative(std::span<const double> f, int order);

/// Real Fourier series of sampled data:
///   f(x) ~ cos_coef[0] + sum_{k>=1} (cos_coef[k] cos kx + sin_coef[k] sin kx),
/// with k up to n/2; sin_coef[n/2] is identically zero and cos_coef[n/2]
/// carries the usual halved Nyquist weight so the series interpolates the
/// samples.
struct FourierCoefficients {
  std::vector<double> cos_coef;
  std::vector<double> sin_coef;
};

FourierCoefficients fourier_coefficients(std::span<const double> f);

/// Band-limited interpolant of uniformly spaced periodic samples. Each
/// evaluation sums the full series (O(n) trig calls): exact at the nodes
/// and everywhere for band-limited data.
class TrigInterpolant {
 public:
  explicit TrigInterpolant(std::span<const double> samples);

  std::size_t grid_size() const noexcept { return n_; }

  double operator()(double angle) const noexcept;
  double derivative(double angle) const noexcept;

 private:
  std::size_t n_ = 0;
  FourierCoefficients coef_;
};

}  // namespace afflow
