#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "afflow/serialization.hpp"
#include "cli.hpp"
#include "verify.hpp"

using namespace afflow;
namespace fs = std::filesystem;

namespace {

struct CoutCapture {
  CoutCapture() : old(std::cout.rdbuf(buffer.rdbuf())) {}
  ~CoutCapture() { std::cout.rdbuf(old); }
  std::ostringstream buffer;
  std::streambuf* old;
};

int run(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "afflow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  CoutCapture capture;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data());
  if (out) *out = capture.buffer.str();
  return code;
}

fs::path fresh_dir(const char* name) {
  const auto dir = fs::temp_directory_path() / "afflow_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kDiskConfig = R"({
  "config_version": 1,
  "body": {"kind": "ellipse", "a": 1.0, "b": 1.0},
  "grid": 128,
  "controller": {"area_floor": 1e-3},
  "record_every": 25,
  "output": {"trajectory_csv": "run.csv", "summary_json": "run.json"}
})";

}  // namespace

TEST_CASE("simulate: unit disk config produces the summary and trajectory") {
  const auto dir = fresh_dir("simulate_disk");
  write_file(dir / "config.json", kDiskConfig);
  ::setenv(cli::kOutDirEnvVar, dir.c_str(), 1);
  const int code = run({"simulate", "--config", (dir / "config.json").string()});
  ::unsetenv(cli::kOutDirEnvVar);
  CHECK(code == cli::kExitOk);

  const auto csv = read_file(dir / "run.csv");
  CHECK(csv.starts_with(
      "t,A,A_star,omega1,omega2,sigma_min,sigma_max,santalo,aff_iso,entropy,"
      "harnack_min,dt\n"));

  const auto summary = nlohmann::json::parse(read_file(dir / "run.json"));
  CHECK(summary["status"] == "extinct");
  CHECK(std::abs(summary["T_est"].get<double>() - 0.75) <= 1e-3);
  CHECK(summary["final_ellipticity"].get<double>() <= 1e-6);
  for (const auto& monitor : summary["monitors"]) {
    CHECK(monitor["verdict"] != "violated");
  }
}

TEST_CASE("simulate: identical configs give byte-identical outputs") {
  const auto dir_a = fresh_dir("determinism_a");
  const auto dir_b = fresh_dir("determinism_b");
  const std::string config = R"({
    "config_version": 1,
    "body": {"kind": "random", "seed": 1},
    "grid": 128,
    "controller": {"area_floor": 5e-2},
    "record_every": 10,
    "output": {"trajectory_csv": "t.csv", "summary_json": "s.json"}
  })";
  for (const auto& dir : {dir_a, dir_b}) {
    write_file(dir / "config.json", config);
    ::setenv(cli::kOutDirEnvVar, dir.c_str(), 1);
    CHECK(run({"simulate", "--config", (dir / "config.json").string()}) == cli::kExitOk);
    ::unsetenv(cli::kOutDirEnvVar);
  }
  CHECK(read_file(dir_a / "t.csv") == read_file(dir_b / "t.csv"));
  CHECK(read_file(dir_a / "s.json") == read_file(dir_b / "s.json"));
}

TEST_CASE("simulate: malformed configs exit with field diagnostics") {
  const auto dir = fresh_dir("bad_config");
  write_file(dir / "config.json", R"({
    "config_version": 7,
    "body": {"kind": "squircle"},
    "grid": 100,
    "record_every": 0
  })");
  CHECK(run({"simulate", "--config", (dir / "config.json").string()}) ==
        cli::kExitBadInput);

  std::vector<std::string> errors;
  CHECK_FALSE(cli::load_config(dir / "config.json", errors).has_value());
  CHECK(errors.size() == 4);  // version, body kind, grid, record_every

  CHECK(run({"simulate", "--config", (dir / "nope.json").string()}) ==
        cli::kExitBadInput);
}

TEST_CASE("simulate: body from a serialized file") {
  const auto dir = fresh_dir("file_body");
  save_support_binary(make_random_body({.seed = 5}, 128).support(), dir / "body.afsf");
  write_file(dir / "config.json", R"({
    "config_version": 1,
    "body": {"kind": "file", "path": ")" + (dir / "body.afsf").string() + R"("},
    "grid": 128,
    "controller": {"area_floor": 1e-1},
    "record_every": 20,
    "output": {"trajectory_csv": "t.csv", "summary_json": "s.json"}
  })");
  ::setenv(cli::kOutDirEnvVar, dir.c_str(), 1);
  CHECK(run({"simulate", "--config", (dir / "config.json").string()}) == cli::kExitOk);
  ::unsetenv(cli::kOutDirEnvVar);
}

TEST_CASE("functionals: unit disk record") {
  std::string out;
  CHECK(run({"functionals", "--ellipse", "1,1"}, &out) == cli::kExitOk);
  const auto record = nlohmann::json::parse(out);
  CHECK(std::abs(record["A"].get<double>() - kPi) <= 1e-9);
  CHECK(std::abs(record["A_star"].get<double>() - kPi) <= 1e-9);
  CHECK(std::abs(record["omega1"].get<double>() - kTwoPi) <= 1e-9);
  CHECK(std::abs(record["santalo"].get<double>() - 1.0) <= 1e-9);
  CHECK(std::abs(record["aff_iso"].get<double>() - 1.0) <= 1e-9);
  CHECK(record["t"] == 0.0);
}

TEST_CASE("functionals: ellipse Santalo equality") {
  std::string out;
  CHECK(run({"functionals", "--ellipse", "2,0.5", "--grid", "256"}, &out) == cli::kExitOk);
  const auto record = nlohmann::json::parse(out);
  CHECK(std::abs(record["santalo"].get<double>() - 1.0) <= 1e-6);
}

TEST_CASE("functionals: invalid bodies and arguments exit 2") {
  CHECK(run({"functionals", "--ellipse", "0,1"}) == cli::kExitBadInput);
  CHECK(run({"functionals", "--ellipse", "banana"}) == cli::kExitBadInput);
  CHECK(run({"functionals", "--random", "1,8,1.0,5.0", "--no-halving"}) ==
        cli::kExitBadInput);
  CHECK(run({"functionals", "--random", "1", "--grid", "100"}) == cli::kExitBadInput);
  CHECK(run({"functionals"}) == cli::kExitBadInput);
}

TEST_CASE("verify: unknown suites exit 2, known names are listed") {
  CHECK(run({"verify", "nonsense"}) == cli::kExitBadInput);
  CHECK(verify::known_suite("all"));
  CHECK(verify::known_suite("exact-solutions"));
  CHECK(verify::known_suite("identities"));
  CHECK(verify::known_suite("monotonicity"));
  CHECK(verify::known_suite("convergence"));
  CHECK_FALSE(verify::known_suite("nonsense"));
  CHECK(verify::suite_names().size() == 5);
}

TEST_CASE("verify: the convergence suite runs and passes in-process") {
  std::string out;
  CHECK(run({"verify", "convergence"}, &out) == cli::kExitOk);
  CHECK(out.find("[PASS] C11") != std::string::npos);
  CHECK(out.find("[PASS] C12") != std::string::npos);
}
