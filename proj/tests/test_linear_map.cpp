#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "afflow/bodies.hpp"
#include "afflow/functionals.hpp"
#include "afflow/linear_map.hpp"
#include "test_helpers.hpp"

using namespace afflow;
using afflow::testing::max_abs_diff;
using afflow::testing::random_sl2;

TEST_CASE("linear map basics") {
  CHECK_THROWS_AS(LinearMap(1, 2, 2, 4), std::invalid_argument);  // singular
  CHECK_THROWS_AS(LinearMap(std::numeric_limits<double>::quiet_NaN(), 0, 0, 1),
                  std::invalid_argument);

  const auto phi = LinearMap(2, 1, 0, 3);
  CHECK(phi.det() == 6.0);
  CHECK_FALSE(phi.is_special());
  CHECK(LinearMap::rotation(0.3).is_special());

  const auto inv = phi.inverse();
  const auto id = phi * inv;
  CHECK(std::abs(id.entry(0, 0) - 1) <= 1e-15);
  CHECK(std::abs(id.entry(0, 1)) <= 1e-15);
  CHECK(std::abs(id.entry(1, 0)) <= 1e-15);
  CHECK(std::abs(id.entry(1, 1) - 1) <= 1e-15);

  const auto tr = phi.transposed();
  CHECK(tr.entry(0, 1) == phi.entry(1, 0));

  const auto v = LinearMap::diagonal(2, 3).apply(1.0, 1.0);
  CHECK(v[0] == 2.0);
  CHECK(v[1] == 3.0);
}

TEST_CASE("identity map leaves the samples unchanged") {
  const auto body = make_random_body({.seed = 3});
  const auto mapped = apply_linear_map(body, LinearMap::identity());
  CHECK(max_abs_diff(mapped.support_samples(), body.support_samples()) <= 1e-12);
}

TEST_CASE("diagonal map of the unit disk gives the ellipse closed form") {
  const auto mapped = apply_linear_map(make_ellipse(1, 1, 0, 256),
                                       LinearMap::diagonal(2.0, 0.5));
  const auto want = testing::ellipse_support_samples(2.0, 0.5, 256);
  CHECK(max_abs_diff(mapped.support_samples(), want) <= 1e-8);
}

TEST_CASE("special linear maps preserve area and the Santalo product") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto body = make_random_body({.seed = static_cast<std::uint64_t>(trial + 1)});
    const auto phi = random_sl2(rng);
    REQUIRE(phi.is_special());
    const auto mapped = apply_linear_map(body, phi);
    CHECK(std::abs(mapped.area() - body.area()) / body.area() <= 1e-8);
    CHECK(std::abs(santalo_ratio(mapped) - santalo_ratio(body)) <= 1e-7);
  }
}

TEST_CASE("p-affine perimeters are GL(2)-equivariant") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 3; ++trial) {
    const auto body = make_random_body({.seed = static_cast<std::uint64_t>(trial + 4)});
    const auto phi = random_sl2(rng);
    const auto mapped = apply_linear_map(body, phi);
    for (double p : {1.0, 2.0}) {
      const double before = p_affine_perimeter(body, p);
      const double after = p_affine_perimeter(mapped, p);
      CHECK(std::abs(after - before) / before <= 1e-6);
    }
  }
}

TEST_CASE("scaling laws for area, polar area and Omega_p") {
  for (double lambda : {0.5, 2.0}) {
    const auto body = make_random_body({.seed = 6});
    const auto scaled = body.scaled(lambda);
    CHECK(std::abs(scaled.area() - lambda * lambda * body.area()) /
              body.area() <= 1e-8);
    CHECK(std::abs(scaled.polar_area() - body.polar_area() / (lambda * lambda)) /
              body.polar_area() <= 1e-8);
    for (double p : {1.0, 2.0, 3.0}) {
      const double want =
          std::pow(lambda, 2.0 * (2.0 - p) / (p + 2.0)) * p_affine_perimeter(body, p);
      CHECK(std::abs(p_affine_perimeter(scaled, p) - want) / want <= 1e-8);
    }
  }
}
