#include "afflow/trajectory_diagnostics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "afflow/errors.hpp"
#include "afflow/functionals.hpp"
#include "afflow/grid.hpp"
#include "afflow/spectral.hpp"

namespace afflow {

const char* to_string(MonitorVerdict verdict) noexcept {
  switch (verdict) {
    case MonitorVerdict::MonotoneIncreasing: return "monotone_increasing";
    case MonitorVerdict::MonotoneDecreasing: return "monotone_decreasing";
    case MonitorVerdict::Bounded: return "bounded";
    case MonitorVerdict::Violated: return "violated";
  }
  return "unknown";
}

std::string MonitorReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["tolerance"] = tolerance;
  j["verdict"] = to_string(verdict);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    arr.push_back({{"t", v.t}, {"magnitude", v.magnitude}});
  }
  j["violations"] = std::move(arr);
  j["samples_ref"] = samples_ref;
  return j.dump();
}

const std::vector<std::string>& monitor_names() {
  static const std::vector<std::string> names = {
      "area", "aff_iso", "santalo", "omega1_tilde", "omega2_tilde", "sigma_ratio"};
  return names;
}

namespace {

enum class Expectation { Increasing, Decreasing, Bounded };

struct SeriesSpec {
  const char* name;
  Expectation expectation;
  const char* samples_ref;
  double (*value)(const FunctionalRecord&);
};

double pick_area(const FunctionalRecord& r) { return r.area; }
double pick_aff_iso(const FunctionalRecord& r) { return r.aff_iso; }
double pick_santalo(const FunctionalRecord& r) { return r.santalo; }
double pick_omega1_tilde(const FunctionalRecord& r) {
  return std::pow(kPi, 1.0 / 3.0) * r.omega1 / std::cbrt(r.area);
}
double pick_omega2_tilde(const FunctionalRecord& r) { return r.omega2; }
double pick_sigma_ratio(const FunctionalRecord& r) { return r.sigma_max / r.sigma_min; }

constexpr SeriesSpec kSeries[] = {
    {"area", Expectation::Decreasing, "A", pick_area},
    {"aff_iso", Expectation::Increasing, "aff_iso", pick_aff_iso},
    {"santalo", Expectation::Increasing, "santalo", pick_santalo},
    {"omega1_tilde", Expectation::Increasing, "pi^(1/3)*omega1/A^(1/3)", pick_omega1_tilde},
    {"omega2_tilde", Expectation::Increasing, "omega2", pick_omega2_tilde},
    {"sigma_ratio", Expectation::Bounded, "sigma_max/sigma_min", pick_sigma_ratio},
};

MonitorReport evaluate_series(const SeriesSpec& spec,
                              const std::vector<FunctionalRecord>& records,
                              double tol) {
  MonitorReport report;
  report.name = spec.name;
  report.tolerance = tol;
  report.samples_ref = spec.samples_ref;
  report.samples.reserve(records.size());
  for (const auto& r : records) {
    report.samples.push_back({r.t, spec.value(r)});
  }

  switch (spec.expectation) {
    case Expectation::Increasing:
      for (std::size_t k = 0; k + 1 < report.samples.size(); ++k) {
        const double drop = report.samples[k].value - report.samples[k + 1].value;
        if (drop > tol) {
          report.violations.push_back({report.samples[k + 1].t, drop});
        }
      }
      report.verdict = report.violations.empty() ? MonitorVerdict::MonotoneIncreasing
                                                 : MonitorVerdict::Violated;
      break;
    case Expectation::Decreasing:
      for (std::size_t k = 0; k + 1 < report.samples.size(); ++k) {
        const double rise = report.samples[k + 1].value - report.samples[k].value;
        if (rise > -tol * std::abs(report.samples[k].value)) {
          report.violations.push_back({report.samples[k + 1].t, rise});
        }
      }
      report.verdict = report.violations.empty() ? MonitorVerdict::MonotoneDecreasing
                                                 : MonitorVerdict::Violated;
      break;
    case Expectation::Bounded: {
      const auto& first = records.front();
      const double cap = std::exp(std::sqrt(
          std::sqrt(32.0) * std::sqrt(first.polar_area) * std::pow(first.omega1, 1.5)));
      for (const auto& sample : report.samples) {
        if (!(sample.value <= cap)) {
          report.violations.push_back({sample.t, sample.value - cap});
        }
      }
      report.verdict = report.violations.empty() ? MonitorVerdict::Bounded
                                                 : MonitorVerdict::Violated;
      break;
    }
  }
  return report;
}

}  // namespace

std::vector<MonitorReport> monotone_monitors(const Trajectory& traj, double tol) {
  if (traj.records.size() < 2) {
    throw InsufficientDataError("monotone monitors need at least 2 records");
  }
  const auto requested = [&](const char* name) {
    return traj.monitors.empty() ||
           std::find(traj.monitors.begin(), traj.monitors.end(), name) !=
               traj.monitors.end();
  };
  std::vector<MonitorReport> reports;
  for (const auto& spec : kSeries) {
    if (requested(spec.name)) {
      reports.push_back(evaluate_series(spec, traj.records, tol));
    }
  }
  return reports;
}

std::vector<double> harnack_quantity(const ConvexBody& body, double t, double t0) {
  if (!(t > t0)) throw std::invalid_argument("harnack quantity needs t > t0");
  const auto r = body.radius_of_curvature();
  const double gain = std::pow(t - t0, 0.25);
  std::vector<double> q(r.size());
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = gain / std::cbrt(r[j]);
  return q;
}

std::vector<double> harnack_quantity(const FlowState& state, double t0) {
  return harnack_quantity(state.body, state.t, t0);
}

std::vector<double> ancient_harnack_quantity(const ConvexBody& body) {
  const auto r = body.radius_of_curvature();
  const auto s = body.support_samples();
  std::vector<double> q(r.size());
  for (std::size_t j = 0; j < q.size(); ++j) q[j] = 1.0 / (std::cbrt(r[j]) * s[j]);
  return q;
}

std::vector<double> ancient_harnack_quantity(const FlowState& state) {
  return ancient_harnack_quantity(state.body);
}

double omega_l_growth_coefficient(double l) noexcept {
  return 2.0 * (l - 2.0) / (l + 2.0);
}

namespace {

// Right side of the Omega_l evolution identity for one body.
double omega_l_rate(const ConvexBody& body, double l) {
  const auto sigma = body.affine_support();
  const auto g = body.arclength_density();
  const std::size_t n = sigma.size();

  const std::vector<double> sigma_vec(sigma.begin(), sigma.end());
  const auto dsigma = spectral_derivative(sigma_vec, 1);

  const double zero_order_exp = -3.0 * l / (l + 2.0);
  const double gradient_exp = -1.0 - 3.0 * l / (l + 2.0);
  double zero_order = 0.0;
  double gradient = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double sigma_s = dsigma[j] / g[j];
    zero_order += std::pow(sigma[j], zero_order_exp) * g[j];
    gradient += std::pow(sigma[j], gradient_exp) * sigma_s * sigma_s * g[j];
  }
  const double dtheta = kTwoPi / static_cast<double>(n);
  zero_order *= dtheta;
  gradient *= dtheta;

  return omega_l_growth_coefficient(l) * zero_order +
         6.0 * l / ((l + 2.0) * (l + 2.0)) * gradient;
}

}  // namespace

MonitorReport omega_l_derivative_check(const Trajectory& traj, double l, double tol) {
  if (!(l >= 2.0) || !std::isfinite(l)) {
    throw std::invalid_argument("omega_l derivative check needs l >= 2");
  }
  if (traj.snapshots.size() < 3) {
    throw InsufficientDataError("omega_l derivative check needs >= 3 snapshots");
  }

  MonitorReport report;
  report.name = "omega_l_derivative[l=" + std::to_string(l) + "]";
  report.tolerance = tol;
  report.samples_ref = "d/dt omega_l vs evolution identity";

  std::vector<double> omega(traj.snapshots.size());
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    omega[k] = p_affine_perimeter(traj.snapshots[k].body, l);
  }

  for (std::size_t k = 1; k + 1 < traj.snapshots.size(); ++k) {
    const auto& prev = traj.snapshots[k - 1];
    const auto& mid = traj.snapshots[k];
    const auto& next = traj.snapshots[k + 1];
    const double fd = (omega[k + 1] - omega[k - 1]) / (next.t - prev.t);
    const double rate = omega_l_rate(mid.body, l);
    const double denom = std::max(std::abs(fd), std::abs(rate));
    const double floor = 1e-12 * std::max(1.0, omega[k]);
    const double rel = denom < floor ? 0.0 : std::abs(fd - rate) / denom;
    report.samples.push_back({mid.t, rel});
    if (rel > tol) report.violations.push_back({mid.t, rel});
  }

  report.verdict = report.violations.empty() ? MonitorVerdict::Bounded
                                             : MonitorVerdict::Violated;
  return report;
}

}  // namespace afflow
