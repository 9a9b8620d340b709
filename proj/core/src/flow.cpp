#include "afflow/flow.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "afflow/body_diagnostics.hpp"
#include "afflow/errors.hpp"
#include "afflow/grid.hpp"

namespace afflow {

const char* to_string(FlowStatus status) noexcept {
  switch (status) {
    case FlowStatus::Running: return "running";
    case FlowStatus::Extinct: return "extinct";
    case FlowStatus::Failed: return "failed";
  }
  return "unknown";
}

const char* to_string(FlowFailure failure) noexcept {
  switch (failure) {
    case FlowFailure::None: return "none";
    case FlowFailure::StepCollapse: return "step_collapse";
    case FlowFailure::NonFinite: return "non_finite";
  }
  return "unknown";
}

void StepController::validate() const {
  if (!(safety > 0.0) || !(safety <= 1.0)) {
    throw std::invalid_argument("safety must lie in (0, 1]");
  }
  if (!(dt_max > 0.0) || !std::isfinite(dt_max)) {
    throw std::invalid_argument("dt_max must be positive and finite");
  }
  if (!(area_floor > 0.0) || !std::isfinite(area_floor)) {
    throw std::invalid_argument("area_floor must be positive and finite");
  }
  if (!(radius_floor > 0.0) || !std::isfinite(radius_floor)) {
    throw std::invalid_argument("radius_floor must be positive and finite");
  }
}

std::vector<double> flow_rhs(const ConvexBody& body) {
  const auto r = body.radius_of_curvature();
  std::vector<double> speed(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    speed[j] = -1.0 / std::cbrt(r[j]);
  }
  return speed;
}

double stable_dt(const ConvexBody& body, const StepController& ctrl) {
  const double dtheta = kTwoPi / static_cast<double>(body.grid_size());
  const double bound =
      ctrl.safety * 1.5 * dtheta * dtheta * std::pow(body.min_radius(), 4.0 / 3.0);
  return std::min(bound, ctrl.dt_max);
}

namespace {

// Strip the degree-one Fourier component (a pure translation velocity).
void remove_translation_modes(std::vector<double>& v) {
  const std::size_t n = v.size();
  const auto cos_t = grid_cos(n);
  const auto sin_t = grid_sin(n);
  double c = 0.0, s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    c += v[j] * cos_t[j];
    s += v[j] * sin_t[j];
  }
  c *= 2.0 / static_cast<double>(n);
  s *= 2.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    v[j] -= c * cos_t[j] + s * sin_t[j];
  }
}

std::vector<double> stage_speed(const std::vector<double>& samples,
                                const StepController& ctrl) {
  ConvexBody stage{SupportFunction(samples), ctrl.radius_floor};
  auto speed = flow_rhs(stage);
  if (ctrl.pin_translation) remove_translation_modes(speed);
  return speed;
}

std::vector<double> axpy(const std::vector<double>& base, double coef,
                         const std::vector<double>& dir) {
  std::vector<double> out(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) out[j] = base[j] + coef * dir[j];
  return out;
}

ConvexBody rk4_step(const ConvexBody& body, const StepController& ctrl, double dt) {
  const auto s0v = body.support_samples();
  const std::vector<double> s0(s0v.begin(), s0v.end());

  auto k1 = stage_speed(s0, ctrl);
  auto k2 = stage_speed(axpy(s0, 0.5 * dt, k1), ctrl);
  auto k3 = stage_speed(axpy(s0, 0.5 * dt, k2), ctrl);
  auto k4 = stage_speed(axpy(s0, dt, k3), ctrl);

  std::vector<double> s1(s0.size());
  for (std::size_t j = 0; j < s0.size(); ++j) {
    s1[j] = s0[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return ConvexBody(SupportFunction(std::move(s1)), ctrl.radius_floor);
}

FunctionalRecord make_record(const FlowState& state, double t0) {
  const ConvexBody& body = state.body;
  FunctionalRecord rec;
  rec.t = state.t;
  rec.area = body.area();
  rec.polar_area = body.polar_area();
  rec.omega1 = body.affine_perimeter();
  rec.omega2 = body.omega2();
  rec.sigma_min = body.sigma_min();
  rec.sigma_max = body.sigma_max();
  rec.santalo = santalo_ratio(body);
  rec.aff_iso = normalized_affine_iso_ratio(body);
  rec.entropy = entropy_functional(body);
  rec.harnack_min =
      state.t > t0
          ? std::pow(state.t - t0, 0.25) / std::cbrt(body.min_radius())
          : 0.0;
  rec.dt = state.dt_last;
  rec.validate();
  return rec;
}

}  // namespace

FlowState step_with_dt(FlowState state, const StepController& ctrl, double dt) {
  ctrl.validate();
  if (state.status != FlowStatus::Running) {
    throw std::logic_error("step on a state that is not running");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("dt must be positive and finite");
  }

  constexpr int kMaxHalvings = 20;
  for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, dt *= 0.5) {
    try {
      ConvexBody next = rk4_step(state.body, ctrl, dt);
      state.body = std::move(next);
      state.t += dt;
      state.dt_last = dt;
      return state;
    } catch (const NonConvexError&) {
      continue;  // overshoot; retry with half the step
    } catch (const OriginNotInteriorError&) {
      continue;
    } catch (const NonFiniteError&) {
      state.status = FlowStatus::Failed;
      state.failure = FlowFailure::NonFinite;
      return state;
    }
  }
  state.status = FlowStatus::Failed;
  state.failure = FlowFailure::StepCollapse;
  return state;
}

FlowState step(FlowState state, const StepController& ctrl) {
  const double dt = stable_dt(state.body, ctrl);
  return step_with_dt(std::move(state), ctrl, dt);
}

double estimate_extinction_time(const FlowState& state) {
  return state.t + 1.5 * state.body.area() / state.body.affine_perimeter();
}

RunResult run(ConvexBody body, const StepController& ctrl, const RunOptions& opts) {
  ctrl.validate();
  if (opts.record_every == 0) {
    throw std::invalid_argument("record_every must be at least 1");
  }
  if (!(opts.t_end > 0.0)) {
    throw std::invalid_argument("t_end must be positive");
  }

  FlowState state{.t = 0.0, .body = std::move(body)};
  Trajectory traj;
  traj.t0 = 0.0;
  traj.monitors = opts.monitors;

  auto record = [&](const FlowState& s) {
    traj.records.push_back(make_record(s, traj.t0));
    if (opts.keep_snapshots) {
      traj.snapshots.push_back({s.t, s.dt_last, s.body});
    }
  };
  record(state);

  std::size_t accepted = 0;
  while (true) {
    if (state.body.area() <= ctrl.area_floor) {
      state.status = FlowStatus::Extinct;
      state.extinction_estimate = estimate_extinction_time(state);
      break;
    }
    if (accepted >= opts.max_steps) break;
    const double remaining = opts.t_end - state.t;
    if (std::isfinite(opts.t_end) && remaining <= 1e-15 * opts.t_end) break;

    double dt = stable_dt(state.body, ctrl);
    if (dt > remaining) dt = remaining;
    state = step_with_dt(std::move(state), ctrl, dt);
    if (state.status == FlowStatus::Failed) break;
    ++accepted;
    if (accepted % opts.record_every == 0) record(state);
  }

  if (traj.records.empty() || traj.records.back().t != state.t) record(state);
  return {std::move(traj), std::move(state)};
}

ConvexBody normalized_view(const FlowState& state) {
  if (state.status == FlowStatus::Failed) {
    throw std::logic_error("normalized view of a failed state");
  }
  return normalize_area(state.body);
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,A,A_star,omega1,omega2,sigma_min,sigma_max,santalo,aff_iso,"
         "entropy,harnack_min,dt\n";
  char buf[400];
  for (const auto& r : traj.records) {
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g\n",
                  r.t, r.area, r.polar_area, r.omega1, r.omega2, r.sigma_min,
                  r.sigma_max, r.santalo, r.aff_iso, r.entropy, r.harnack_min,
                  r.dt);
    out << buf;
  }
}

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_trajectory_csv(traj, out);
}

}  // namespace afflow
