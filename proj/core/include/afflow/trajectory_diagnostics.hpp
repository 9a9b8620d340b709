#pragma once

#include <string>
#include <vector>

#include "afflow/flow.hpp"

namespace afflow {

enum class MonitorVerdict {
  MonotoneIncreasing,
  MonotoneDecreasing,
  Bounded,
  Violated,
};

const char* to_string(MonitorVerdict verdict) noexcept;

struct MonitorViolation {
  double t;
  double magnitude;
};

struct MonitorSample {
  double t;
  double value;
};

struct MonitorReport {
  std::string name;
  double tolerance = 0.0;
  MonitorVerdict verdict = MonitorVerdict::Violated;
  std::vector<MonitorViolation> violations;
  std::vector<MonitorSample> samples;
  std::string samples_ref;  // trajectory-CSV column the series came from

  /// {name, tolerance, verdict, violations: [{t, magnitude}], samples_ref}
  std::string to_json() const;
};

/// Monitor names understood by monotone_monitors().
const std::vector<std::string>& monitor_names();

/// Verdicts for the scalar series of a trajectory:
///   area          strictly decreasing (relative slack tol per step)
///   aff_iso       non-decreasing (absolute slack tol per step)
///   santalo       non-decreasing
///   omega1_tilde  pi^(1/3) Omega_1 / A^(1/3), non-decreasing
///   omega2_tilde  Omega_2 (already scale-invariant), non-decreasing
///   sigma_ratio   sigma_max/sigma_min, bounded by
///                 exp((32^(1/2) A*^(1/2) Omega_1^(3/2))^(1/2)) at the
///                 first record
/// Only the names requested in traj.monitors are evaluated (empty = all).
/// Throws InsufficientDataError for trajectories with fewer than 2 records.
std::vector<MonitorReport> monotone_monitors(const Trajectory& traj,
                                             double tol = 1e-7);

/// r^(-1/3) (t - t0)^(1/4) on the grid: pointwise non-decreasing in t along
/// any trajectory started at t0. Requires t > t0.
std::vector<double> harnack_quantity(const ConvexBody& body, double t, double t0);
std::vector<double> harnack_quantity(const FlowState& state, double t0);

/// r^(-1/3) / s on the grid: non-decreasing along trajectories that extend
/// backward for all time (ellipses); not asserted on generic trajectories.
std::vector<double> ancient_harnack_quantity(const ConvexBody& body);
std::vector<double> ancient_harnack_quantity(const FlowState& state);

/// 2(l-2)/(l+2), the coefficient of the zeroth-order integral in the
/// Omega_l evolution identity; exactly zero at l = 2.
double omega_l_growth_coefficient(double l) noexcept;

/// Checks the identity
///   d/dt Omega_l = 2(l-2)/(l+2) ∮ sigma^(-3l/(l+2)) ds
///                + 6l/(l+2)^2 ∮ sigma^(-1-3l/(l+2)) sigma_s^2 ds
/// against centered differences of Omega_l across consecutive snapshots.
/// The report's samples hold (t, relative error); verdict Bounded when the
/// worst error is within tol. Needs l >= 2 and at least 3 snapshots.
MonitorReport omega_l_derivative_check(const Trajectory& traj, double l,
                                       double tol = 1e-2);

}  // namespace afflow
