#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace afflow {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr std::size_t kDefaultGridSize = 256;
inline constexpr std::size_t kMinGridSize = 64;

/// True when n is a power of two and at least kMinGridSize.
bool valid_grid_size(std::size_t n) noexcept;

/// theta_j = 2 pi j / n, j = 0..n-1. Cached per grid size; the returned
/// span stays valid for the lifetime of the thread.
std::span<const double> grid_angles(std::size_t n);

/// cos/sin tables on the same grid, cached alongside grid_angles().
std::span<const double> grid_cos(std::size_t n);
std::span<const double> grid_sin(std::size_t n);

/// Integral over one period of uniformly spaced samples (trapezoid rule,
/// which is spectrally accurate for smooth periodic integrands).
double periodic_integral(std::span<const double> f);

}  // namespace afflow
