#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "afflow/convex_body.hpp"
#include "afflow/functionals.hpp"

namespace afflow {

enum class FlowStatus { Running, Extinct, Failed };
enum class FlowFailure { None, StepCollapse, NonFinite };

const char* to_string(FlowStatus status) noexcept;
const char* to_string(FlowFailure failure) noexcept;

/// Step-size policy for the explicit RK4 integrator. The accepted step is
///   dt = safety * (3/2) * dtheta^2 * (min_j r_j)^(4/3),  capped at dt_max:
/// the parabolic stability bound for the linearized speed, whose diffusion
/// coefficient is r^(-4/3)/3.
struct StepController {
  double safety = 0.5;       // in (0, 1]
  double dt_max = 1e-2;
  double area_floor = 1e-4;  // extinction threshold for run()
  double radius_floor = kDefaultRadiusFloor;

  /// Project the degree-one Fourier modes out of the speed. Those modes
  /// are pure translations: they never enter r, so the evolving shapes are
  /// identical, but keeping them at zero pins the Steiner point (and hence
  /// the eventual extinction point) at the origin, which is the frame every
  /// origin-dependent functional (sigma, A*, the Santalo product) assumes.
  /// With pinning off, generic bodies drift and the origin can exit the
  /// body before the area floor is reached.
  bool pin_translation = true;

  void validate() const;  // throws std::invalid_argument
};

struct FlowState {
  double t = 0.0;
  ConvexBody body;
  double dt_last = 0.0;
  FlowStatus status = FlowStatus::Running;
  FlowFailure failure = FlowFailure::None;
  /// Estimated extinction time; meaningful once status == Extinct.
  double extinction_estimate = std::numeric_limits<double>::quiet_NaN();
};

/// Inward normal speed in support form: dt s = -r^(-1/3), on the grid.
std::vector<double> flow_rhs(const ConvexBody& body);

/// Stability-bounded step size for the current body.
double stable_dt(const ConvexBody& body, const StepController& ctrl);

/// One RK4 step at the controller's stable step size. Every stage passes
/// the convexity gate; on gate failure dt is halved, up to 20 times, before
/// the state turns Failed(StepCollapse). Non-finite stage data turns the
/// state Failed(NonFinite) immediately. Requires a Running state.
FlowState step(FlowState state, const StepController& ctrl);

/// Same, with a caller-chosen initial dt.
FlowState step_with_dt(FlowState state, const StepController& ctrl, double dt);

struct RunOptions {
  std::size_t record_every = 20;  // record cadence in accepted steps
  bool keep_snapshots = false;    // retain full bodies at record times
  double t_end = std::numeric_limits<double>::infinity();  // exact landing
  std::size_t max_steps = std::numeric_limits<std::size_t>::max();
  /// Monitor names the caller intends to evaluate on the result (empty =
  /// all); carried through to the trajectory for the monitor evaluator.
  std::vector<std::string> monitors;
};

struct TrajectorySnapshot {
  double t;
  double dt;
  ConvexBody body;
};

struct Trajectory {
  double t0 = 0.0;
  std::vector<FunctionalRecord> records;
  std::vector<TrajectorySnapshot> snapshots;  // nonempty iff keep_snapshots
  std::vector<std::string> monitors;
};

struct RunResult {
  Trajectory trajectory;
  FlowState final_state;
};

/// March the flow until the area floor (extinction), t_end, max_steps, or a
/// failure. Records a FunctionalRecord at t = 0, after every record_every
/// accepted steps, and at the final state. On extinction the finite
/// extinction time is estimated from dA/dt = -Omega_1 together with the
/// self-similar tail A ~ (T - t)^(3/2):
///   T_est = t + (3/2) A / Omega_1,
/// which is exact for shrinking ellipses.
RunResult run(ConvexBody body, const StepController& ctrl,
              const RunOptions& opts = {});

/// Extinction-time estimate from the current state (see run()).
double estimate_extinction_time(const FlowState& state);

/// The body rescaled so its area is pi (a snapshot of the normalized
/// solution). Requires a Running or Extinct state.
ConvexBody normalized_view(const FlowState& state);

/// CSV with the fixed header
///   t,A,A_star,omega1,omega2,sigma_min,sigma_max,santalo,aff_iso,entropy,harnack_min,dt
/// and 17 significant digits per value.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);

}  // namespace afflow
