#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "afflow/afflow.hpp"
#include "verify.hpp"

namespace afflow::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ------------------------------------------------------------- config file

void parse_body(const json& j, BodySpec& body, std::vector<std::string>& errors) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    errors.push_back("body: needs a \"kind\" of ellipse|random|file");
    return;
  }
  const std::string kind = j["kind"];
  auto number = [&](const char* key, double& out, bool required, auto pred,
                    const char* what) {
    if (!j.contains(key)) {
      if (required) errors.push_back(std::string("body.") + key + ": missing");
      return;
    }
    if (!j[key].is_number()) {
      errors.push_back(std::string("body.") + key + ": must be a number");
      return;
    }
    const double v = j[key];
    if (!pred(v)) {
      errors.push_back(std::string("body.") + key + ": " + what);
      return;
    }
    out = v;
  };
  auto positive = [](double v) { return v > 0.0; };
  auto any = [](double) { return true; };
  auto non_negative = [](double v) { return v >= 0.0; };

  if (kind == "ellipse") {
    body.kind = BodySpec::Kind::Ellipse;
    number("a", body.a, true, positive, "must be > 0");
    number("b", body.b, true, positive, "must be > 0");
    number("rotation", body.rotation, false, any, "");
  } else if (kind == "random") {
    body.kind = BodySpec::Kind::Random;
    if (!j.contains("seed") || !j["seed"].is_number_unsigned()) {
      errors.push_back("body.seed: missing or not a non-negative integer");
    } else {
      body.random.seed = j["seed"];
    }
    if (j.contains("max_harmonic")) {
      if (!j["max_harmonic"].is_number_integer() || j["max_harmonic"] < 2) {
        errors.push_back("body.max_harmonic: must be an integer >= 2");
      } else {
        body.random.max_harmonic = j["max_harmonic"];
      }
    }
    number("decay", body.random.decay, false, any, "");
    number("amplitude", body.random.amplitude, false, non_negative, "must be >= 0");
    if (j.contains("halve_to_fit")) {
      if (!j["halve_to_fit"].is_boolean()) {
        errors.push_back("body.halve_to_fit: must be a boolean");
      } else {
        body.random.halve_to_fit = j["halve_to_fit"];
      }
    }
  } else if (kind == "file") {
    body.kind = BodySpec::Kind::File;
    if (!j.contains("path") || !j["path"].is_string()) {
      errors.push_back("body.path: missing or not a string");
    } else {
      body.path = std::string(j["path"]);
    }
  } else {
    errors.push_back("body.kind: unknown kind \"" + kind + "\"");
  }
}

void parse_controller(const json& j, StepController& ctrl,
                      std::vector<std::string>& errors) {
  if (!j.is_object()) {
    errors.push_back("controller: must be an object");
    return;
  }
  auto number = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) {
      errors.push_back(std::string("controller.") + key + ": must be a number");
      return;
    }
    out = j[key];
  };
  number("safety", ctrl.safety);
  number("dt_max", ctrl.dt_max);
  number("area_floor", ctrl.area_floor);
  number("radius_floor", ctrl.radius_floor);
  if (j.contains("pin_translation")) {
    if (!j["pin_translation"].is_boolean()) {
      errors.push_back("controller.pin_translation: must be a boolean");
    } else {
      ctrl.pin_translation = j["pin_translation"];
    }
  }
  try {
    ctrl.validate();
  } catch (const std::invalid_argument& e) {
    errors.push_back(std::string("controller: ") + e.what());
  }
}

}  // namespace

std::optional<ExperimentConfig> load_config(const std::filesystem::path& path,
                                            std::vector<std::string>& errors) {
  std::ifstream in(path);
  if (!in) {
    errors.push_back("cannot open config file " + path.string());
    return std::nullopt;
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    errors.push_back(std::string("config is not valid JSON: ") + e.what());
    return std::nullopt;
  }
  if (!j.is_object()) {
    errors.push_back("config root must be an object");
    return std::nullopt;
  }

  ExperimentConfig config;
  if (!j.contains("config_version") || !j["config_version"].is_number_integer()) {
    errors.push_back("config_version: missing or not an integer");
  } else if (j["config_version"] != 1) {
    errors.push_back("config_version: only version 1 is understood");
  }

  if (j.contains("body")) {
    parse_body(j["body"], config.body, errors);
  } else {
    errors.push_back("body: missing");
  }

  if (j.contains("grid")) {
    if (!j["grid"].is_number_unsigned() ||
        !valid_grid_size(j["grid"].get<std::size_t>())) {
      errors.push_back("grid: must be a power of two >= 64");
    } else {
      config.grid = j["grid"];
    }
  }
  if (j.contains("controller")) parse_controller(j["controller"], config.controller, errors);
  if (j.contains("record_every")) {
    if (!j["record_every"].is_number_unsigned() || j["record_every"] == 0) {
      errors.push_back("record_every: must be a positive integer");
    } else {
      config.record_every = j["record_every"];
    }
  }
  if (j.contains("monitor_tolerance")) {
    if (!j["monitor_tolerance"].is_number() || !(j["monitor_tolerance"].get<double>() > 0)) {
      errors.push_back("monitor_tolerance: must be a positive number");
    } else {
      config.monitor_tolerance = j["monitor_tolerance"];
    }
  }
  if (j.contains("monitors")) {
    if (!j["monitors"].is_array()) {
      errors.push_back("monitors: must be an array of names");
    } else {
      for (const auto& name : j["monitors"]) {
        if (!name.is_string()) {
          errors.push_back("monitors: entries must be strings");
          continue;
        }
        const auto& known = monitor_names();
        if (std::find(known.begin(), known.end(), name.get<std::string>()) == known.end()) {
          errors.push_back("monitors: unknown monitor \"" + name.get<std::string>() + "\"");
        } else {
          config.monitors.push_back(name);
        }
      }
    }
  }
  if (j.contains("output")) {
    const auto& out = j["output"];
    if (!out.is_object()) {
      errors.push_back("output: must be an object");
    } else {
      if (out.contains("trajectory_csv")) {
        if (!out["trajectory_csv"].is_string()) {
          errors.push_back("output.trajectory_csv: must be a string");
        } else {
          config.trajectory_csv = std::string(out["trajectory_csv"]);
        }
      }
      if (out.contains("summary_json")) {
        if (!out["summary_json"].is_string()) {
          errors.push_back("output.summary_json: must be a string");
        } else {
          config.summary_json = std::string(out["summary_json"]);
        }
      }
    }
  }

  if (!errors.empty()) return std::nullopt;
  return config;
}

ConvexBody build_body(const BodySpec& spec, std::size_t grid, double radius_floor) {
  switch (spec.kind) {
    case BodySpec::Kind::Ellipse:
      return make_ellipse(spec.a, spec.b, spec.rotation, grid, radius_floor);
    case BodySpec::Kind::Random:
      return make_random_body(spec.random, grid, radius_floor);
    case BodySpec::Kind::File: {
      auto support = load_support_auto(spec.path);
      return ConvexBody(std::move(support), radius_floor);
    }
  }
  throw std::logic_error("unreachable body kind");
}

namespace {

std::filesystem::path resolve_output(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv(kOutDirEnvVar); dir && *dir) {
    return std::filesystem::path(dir) / path;
  }
  return path;
}

ordered_json body_to_json(const BodySpec& spec) {
  ordered_json j;
  switch (spec.kind) {
    case BodySpec::Kind::Ellipse:
      j["kind"] = "ellipse";
      j["a"] = spec.a;
      j["b"] = spec.b;
      j["rotation"] = spec.rotation;
      break;
    case BodySpec::Kind::Random:
      j["kind"] = "random";
      j["seed"] = spec.random.seed;
      j["max_harmonic"] = spec.random.max_harmonic;
      j["decay"] = spec.random.decay;
      j["amplitude"] = spec.random.amplitude;
      j["rng_algorithm"] = kRandomBodyRngId;
      break;
    case BodySpec::Kind::File:
      j["kind"] = "file";
      j["path"] = spec.path.string();
      break;
  }
  return j;
}

ordered_json record_to_json(const FunctionalRecord& r) {
  ordered_json j;
  j["t"] = r.t;
  j["A"] = r.area;
  j["A_star"] = r.polar_area;
  j["omega1"] = r.omega1;
  j["omega2"] = r.omega2;
  j["sigma_min"] = r.sigma_min;
  j["sigma_max"] = r.sigma_max;
  j["santalo"] = r.santalo;
  j["aff_iso"] = r.aff_iso;
  j["entropy"] = r.entropy;
  j["harnack_min"] = r.harnack_min;
  j["dt"] = r.dt;
  return j;
}

int cmd_simulate(const std::filesystem::path& config_path) {
  std::vector<std::string> errors;
  const auto config = load_config(config_path, errors);
  if (!config) {
    for (const auto& e : errors) std::cerr << "config error: " << e << "\n";
    return kExitBadInput;
  }

  ConvexBody body = [&] {
    try {
      return build_body(config->body, config->grid, config->controller.radius_floor);
    } catch (const std::exception& e) {
      std::cerr << "body error: " << e.what() << "\n";
      std::exit(kExitBadInput);
    }
  }();

  RunOptions opts;
  opts.record_every = config->record_every;
  opts.monitors = config->monitors;
  auto result = run(std::move(body), config->controller, opts);

  const auto csv_path = resolve_output(config->trajectory_csv);
  const auto summary_path = resolve_output(config->summary_json);
  write_trajectory_csv(result.trajectory, csv_path);

  const auto reports = monotone_monitors(result.trajectory, config->monitor_tolerance);
  bool violated = false;

  ordered_json summary;
  summary["config_version"] = config->config_version;
  summary["body"] = body_to_json(config->body);
  summary["grid"] = config->grid;
  summary["status"] = to_string(result.final_state.status);
  if (result.final_state.status == FlowStatus::Failed) {
    summary["failure"] = to_string(result.final_state.failure);
  }
  summary["final_time"] = result.final_state.t;
  summary["records"] = result.trajectory.records.size();
  if (result.final_state.status == FlowStatus::Extinct) {
    summary["T_est"] = result.final_state.extinction_estimate;
  }
  summary["final_ellipticity"] = ellipticity(result.final_state.body);
  auto monitor_array = ordered_json::array();
  for (const auto& report : reports) {
    monitor_array.push_back(ordered_json::parse(report.to_json()));
    violated = violated || report.verdict == MonitorVerdict::Violated;
  }
  summary["monitors"] = std::move(monitor_array);
  summary["trajectory_csv"] = csv_path.string();

  std::ofstream out(summary_path, std::ios::trunc);
  if (!out) {
    std::cerr << "cannot write " << summary_path << "\n";
    return kExitBadInput;
  }
  out << summary.dump(2) << "\n";
  std::cout << summary.dump(2) << "\n";

  if (result.final_state.status == FlowStatus::Failed) return kExitFlowFailed;
  return violated ? kExitViolations : kExitOk;
}

bool parse_ellipse_arg(const std::string& text, BodySpec& spec) {
  std::istringstream in(text);
  char comma = ',';
  spec.kind = BodySpec::Kind::Ellipse;
  if (!(in >> spec.a >> comma >> spec.b) || comma != ',') return false;
  if (in.peek() == ',') {
    in.get();
    if (!(in >> spec.rotation)) return false;
  }
  return in.eof() && spec.a > 0 && spec.b > 0;
}

bool parse_random_arg(const std::string& text, BodySpec& spec) {
  spec.kind = BodySpec::Kind::Random;
  std::istringstream in(text);
  if (!(in >> spec.random.seed)) return false;
  auto next_field = [&](auto& out) {
    if (in.peek() != ',') return true;  // optional tail
    in.get();
    return static_cast<bool>(in >> out);
  };
  if (!next_field(spec.random.max_harmonic)) return false;
  if (!next_field(spec.random.decay)) return false;
  if (!next_field(spec.random.amplitude)) return false;
  return in.eof() && spec.random.max_harmonic >= 2 && spec.random.amplitude >= 0;
}

int cmd_functionals(const BodySpec& spec, std::size_t grid) {
  try {
    const ConvexBody body = build_body(spec, grid, kDefaultRadiusFloor);
    FunctionalRecord record;
    record.t = 0.0;
    record.area = body.area();
    record.polar_area = body.polar_area();
    record.omega1 = body.affine_perimeter();
    record.omega2 = body.omega2();
    record.sigma_min = body.sigma_min();
    record.sigma_max = body.sigma_max();
    record.santalo = santalo_ratio(body);
    record.aff_iso = normalized_affine_iso_ratio(body);
    record.entropy = entropy_functional(body);
    record.harnack_min = 0.0;
    record.dt = 0.0;
    record.validate();
    std::cout << record_to_json(record).dump(2) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "body error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_verify(const std::string& suite) {
  if (!verify::known_suite(suite)) {
    std::cerr << "unknown suite \"" << suite << "\"; choose one of:";
    for (const auto& name : verify::suite_names()) std::cerr << " " << name;
    std::cerr << "\n";
    return kExitBadInput;
  }
  const auto results = verify::run_suite(suite);
  verify::print_table(results, std::cout);
  return verify::all_pass(results) ? kExitOk : kExitViolations;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"afflow: a numerical laboratory for the planar affine normal flow"};
  app.require_subcommand(1);

  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "run a flow experiment from a config file");
  simulate->add_option("--config", config_path, "experiment config (JSON)")->required();

  std::string ellipse_arg, random_arg;
  std::size_t grid = kDefaultGridSize;
  bool no_halving = false;
  auto* functionals =
      app.add_subcommand("functionals", "print the functional record of a body at t=0");
  auto* ellipse_opt =
      functionals->add_option("--ellipse", ellipse_arg, "ellipse a,b[,rotation]");
  auto* random_opt =
      functionals->add_option("--random", random_arg, "random body seed[,max_harmonic,decay,amplitude]");
  ellipse_opt->excludes(random_opt);
  functionals->add_option("--grid", grid, "grid size (power of two >= 64)");
  functionals->add_flag("--no-halving", no_halving,
                        "fail instead of halving an infeasible random amplitude");

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "exact-solutions|identities|monotonicity|convergence|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(config_path);
    if (functionals->parsed()) {
      if (!valid_grid_size(grid)) {
        std::cerr << "grid must be a power of two >= " << kMinGridSize << "\n";
        return kExitBadInput;
      }
      BodySpec spec;
      if (ellipse_opt->count()) {
        if (!parse_ellipse_arg(ellipse_arg, spec)) {
          std::cerr << "bad --ellipse argument, expected a,b[,rotation] with a,b > 0\n";
          return kExitBadInput;
        }
      } else if (random_opt->count()) {
        if (!parse_random_arg(random_arg, spec)) {
          std::cerr << "bad --random argument, expected seed[,max_harmonic,decay,amplitude]\n";
          return kExitBadInput;
        }
        spec.random.halve_to_fit = !no_halving;
      } else {
        std::cerr << "functionals needs --ellipse or --random\n";
        return kExitBadInput;
      }
      return cmd_functionals(spec, grid);
    }
    if (verify_cmd->parsed()) return cmd_verify(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace afflow::cli
