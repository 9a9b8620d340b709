#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>

#include "afflow/bodies.hpp"
#include "afflow/errors.hpp"
#include "afflow/serialization.hpp"

using namespace afflow;

namespace {

std::filesystem::path temp_file(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "afflow_serialization_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

bool bitwise_equal(const SupportFunction& a, const SupportFunction& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.samples().data(), b.samples().data(),
                     a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("binary serialization round-trips bit-exactly") {
  const auto body = make_random_body({.seed = 31});
  const auto& support = body.support();

  const auto bytes = support_to_bytes(support);
  CHECK(bytes.size() == 12 + support.size() * sizeof(double));
  const auto back = support_from_bytes(bytes);
  CHECK(bitwise_equal(support, back));

  const auto path = temp_file("roundtrip.afsf");
  save_support_binary(support, path);
  CHECK(bitwise_equal(support, load_support_binary(path)));
}

TEST_CASE("binary header is validated") {
  const auto support = make_ellipse(1, 1, 0, 64).support();
  auto bytes = support_to_bytes(support);

  auto corrupted = bytes;
  corrupted[0] = std::byte{'X'};
  CHECK_THROWS_AS(support_from_bytes(corrupted), SerializationError);

  auto wrong_version = bytes;
  wrong_version[4] = std::byte{9};
  CHECK_THROWS_AS(support_from_bytes(wrong_version), SerializationError);

  auto truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS_AS(support_from_bytes(truncated), SerializationError);
}

TEST_CASE("json serialization round-trips exactly") {
  const auto body = make_random_body({.seed = 8});
  const auto& support = body.support();
  const auto text = support_to_json_text(support);
  const auto back = support_from_json_text(text);
  CHECK(bitwise_equal(support, back));

  const auto path = temp_file("roundtrip.json");
  save_support_json(support, path);
  CHECK(bitwise_equal(support, load_support_json(path)));
}

TEST_CASE("json body files are validated") {
  CHECK_THROWS_AS(support_from_json_text("not json at all"), SerializationError);
  CHECK_THROWS_AS(support_from_json_text("{\"n\": 64}"), SerializationError);
  CHECK_THROWS_AS(
      support_from_json_text("{\"format_version\":1,\"n\":64,\"samples\":[1.0]}"),
      SerializationError);
  CHECK_THROWS_AS(
      support_from_json_text("{\"format_version\":2,\"n\":64,\"samples\":[]}"),
      SerializationError);
}

TEST_CASE("auto loader dispatches on the magic") {
  const auto support = make_ellipse(1.5, 0.8, 0.2, 128).support();

  const auto bin_path = temp_file("auto.afsf");
  save_support_binary(support, bin_path);
  CHECK(bitwise_equal(support, load_support_auto(bin_path)));

  const auto json_path = temp_file("auto.json");
  save_support_json(support, json_path);
  CHECK(bitwise_equal(support, load_support_auto(json_path)));

  CHECK_THROWS_AS(load_support_auto(temp_file("missing.afsf")), SerializationError);
}
