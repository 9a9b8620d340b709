#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "afflow/bodies.hpp"
#include "afflow/errors.hpp"
#include "afflow/functionals.hpp"
#include "afflow/grid.hpp"
#include "test_helpers.hpp"

using namespace afflow;

TEST_CASE("ellipse constructor hits the axis values") {
  const auto body = make_ellipse(2.0, 1.0);
  const std::size_t n = body.grid_size();
  CHECK(body.support_samples()[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(body.support_samples()[n / 4] == doctest::Approx(1.0).epsilon(1e-12));

  const auto rotated = make_ellipse(2.0, 1.0, kPi / 2);
  CHECK(rotated.support_samples()[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rotated.support_samples()[n / 4] == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(make_ellipse(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_ellipse(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("zero amplitude gives the unit disk exactly") {
  const auto body = make_random_body({.seed = 123, .amplitude = 0.0});
  CHECK(testing::max_abs_dev(body.support_samples(), 1.0) == 0.0);
}

TEST_CASE("random bodies are bitwise deterministic in the seed") {
  const auto a = make_random_body({.seed = 17});
  const auto b = make_random_body({.seed = 17});
  const auto sa = a.support_samples();
  const auto sb = b.support_samples();
  REQUIRE(sa.size() == sb.size());
  CHECK(std::memcmp(sa.data(), sb.data(), sa.size() * sizeof(double)) == 0);

  const auto c = make_random_body({.seed = 18});
  CHECK(std::memcmp(sa.data(), c.support_samples().data(),
                    sa.size() * sizeof(double)) != 0);
}

TEST_CASE("seed 1 body is comfortably convex and strictly non-elliptical") {
  const auto body = make_random_body({.seed = 1, .max_harmonic = 8, .decay = 2.0,
                                      .amplitude = 0.2});
  CHECK(body.min_radius() >= 0.05);
  double min_s = 1e9;
  for (double v : body.support_samples()) min_s = std::min(min_s, v);
  CHECK(min_s >= 0.05);
  CHECK(normalized_affine_iso_ratio(body) < 1.0);
}

TEST_CASE("infeasible amplitudes halve to a valid body, or throw when told not to") {
  const RandomBodyParams wild{.seed = 5, .max_harmonic = 8, .decay = 1.0,
                              .amplitude = 5.0};
  const auto body = make_random_body(wild);
  CHECK(body.min_radius() >= 0.05);

  RandomBodyParams strict = wild;
  strict.halve_to_fit = false;
  CHECK_THROWS_AS(make_random_body(strict), NonConvexError);
}

TEST_CASE("random body parameters are validated") {
  CHECK_THROWS_AS(make_random_body({.seed = 1, .max_harmonic = 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_random_body({.seed = 1, .amplitude = -0.1}), std::invalid_argument);
}

TEST_CASE("random Fourier data either yields a valid body or NonConvexError, "
          "never silent acceptance") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const std::size_t n = 128;
  const auto angles = grid_angles(n);
  int ok = 0, rejected = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const double amplitude = 0.02 + 0.4 * std::abs(unif(rng));
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = 1.0;
    }
    for (int k = 2; k <= 6; ++k) {
      const double ak = amplitude * unif(rng) / k;
      const double bk = amplitude * unif(rng) / k;
      for (std::size_t j = 0; j < n; ++j) {
        s[j] += ak * std::cos(k * angles[j]) + bk * std::sin(k * angles[j]);
      }
    }
    try {
      ConvexBody body{SupportFunction(std::move(s))};
      CHECK(body.min_radius() > body.radius_floor());
      ++ok;
    } catch (const NonConvexError& e) {
      CHECK(e.min_value() <= kDefaultRadiusFloor);
      ++rejected;
    }
  }
  // the amplitude range is chosen to exercise both outcomes
  CHECK(ok > 0);
  CHECK(rejected > 0);
}
