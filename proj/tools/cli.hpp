#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "afflow/bodies.hpp"
#include "afflow/flow.hpp"

namespace afflow::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;  // monitor violated / suite failed
inline constexpr int kExitBadInput = 2;    // config or body errors
inline constexpr int kExitFlowFailed = 3;

struct BodySpec {
  enum class Kind { Ellipse, Random, File };
  Kind kind = Kind::Ellipse;
  // ellipse
  double a = 1.0;
  double b = 1.0;
  double rotation = 0.0;
  // random
  RandomBodyParams random;
  // file
  std::filesystem::path path;
};

struct ExperimentConfig {
  int config_version = 1;
  BodySpec body;
  std::size_t grid = kDefaultGridSize;
  StepController controller;
  std::size_t record_every = 20;
  double monitor_tolerance = 1e-7;
  std::vector<std::string> monitors;  // empty = all
  std::filesystem::path trajectory_csv = "trajectory.csv";
  std::filesystem::path summary_json = "summary.json";
};

/// Parses and validates a config file; field-level problems land in
/// `errors` and the optional stays empty.
std::optional<ExperimentConfig> load_config(const std::filesystem::path& path,
                                            std::vector<std::string>& errors);

/// Output directory override; relative output paths are resolved under it.
inline constexpr const char* kOutDirEnvVar = "AFFLOW_OUT_DIR";

ConvexBody build_body(const BodySpec& spec, std::size_t grid, double radius_floor);

int run_cli(int argc, const char* const* argv);

}  // namespace afflow::cli
