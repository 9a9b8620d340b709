#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "afflow/bodies.hpp"
#include "afflow/convex_body.hpp"
#include "afflow/errors.hpp"
#include "afflow/grid.hpp"
#include "test_helpers.hpp"

using namespace afflow;
using afflow::testing::ellipse_support_samples;

TEST_CASE("support function validates its grid") {
  CHECK_THROWS_AS(SupportFunction(std::vector<double>(63, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(SupportFunction(std::vector<double>(100, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(SupportFunction(std::vector<double>(32, 1.0)), std::invalid_argument);
  CHECK_NOTHROW(SupportFunction(std::vector<double>(64, 1.0)));
}

TEST_CASE("support function rejects non-finite and non-positive samples") {
  std::vector<double> s(64, 1.0);
  s[5] = std::numeric_limits<double>::infinity();
  try {
    SupportFunction bad(std::move(s));
    FAIL("expected NonFiniteError");
  } catch (const NonFiniteError& e) {
    CHECK(e.index() == 5);
  }

  std::vector<double> t(64, 1.0);
  t[10] = -0.25;
  try {
    SupportFunction bad(std::move(t));
    FAIL("expected OriginNotInteriorError");
  } catch (const OriginNotInteriorError& e) {
    CHECK(e.index() == 10);
    CHECK(e.value() == -0.25);
  }
}

TEST_CASE("support function wraps indices periodically") {
  std::vector<double> s(64, 1.0);
  s[3] = 2.0;
  const SupportFunction f(std::move(s));
  CHECK(f.wrapped(3) == 2.0);
  CHECK(f.wrapped(3 + 64) == 2.0);
  CHECK(f.wrapped(3 - 64) == 2.0);
  CHECK(f.wrapped(-61) == 2.0);
}

TEST_CASE("radius of curvature of the unit disk is one") {
  const auto disk = make_ellipse(1.0, 1.0);
  CHECK(testing::max_abs_dev(disk.radius_of_curvature(), 1.0) <= 1e-13);
}

TEST_CASE("radius of curvature matches the ellipse closed form a^2 b^2 / s^3") {
  const double a = 2.0, b = 1.0;
  const auto body = make_ellipse(a, b, 0.0, 256);
  const auto s = body.support_samples();
  const auto r = body.radius_of_curvature();
  double worst = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double want = a * a * b * b / (s[j] * s[j] * s[j]);
    worst = std::max(worst, std::abs(r[j] - want) / want);
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("a cos(2 theta) bump beyond the convexity limit is rejected") {
  // s = 1 + 0.6 cos 2theta gives r = 1 - 1.8 cos 2theta, minimal at theta=0.
  const std::size_t n = 256;
  std::vector<double> s(n);
  const auto angles = grid_angles(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = 1.0 + 0.6 * std::cos(2.0 * angles[j]);
  try {
    ConvexBody body{SupportFunction(std::move(s))};
    FAIL("expected NonConvexError");
  } catch (const NonConvexError& e) {
    CHECK(e.index() == 0);
    CHECK(e.min_value() == doctest::Approx(-0.8).epsilon(1e-10));
  }
}

TEST_CASE("affine support function") {
  SUBCASE("unit disk: sigma = 1") {
    CHECK(testing::max_abs_dev(make_ellipse(1, 1).affine_support(), 1.0) <= 1e-13);
  }
  SUBCASE("disk of radius rho: sigma = rho^(4/3)") {
    for (double rho : {0.5, 2.0, 3.0}) {
      CHECK(testing::max_abs_dev(make_ellipse(rho, rho).affine_support(),
                                 std::pow(rho, 4.0 / 3.0)) <= 1e-12);
    }
  }
  SUBCASE("ellipse: sigma = (ab)^(2/3), constant") {
    const auto body = make_ellipse(2.0, 0.5, 0.0, 256);
    CHECK(testing::max_abs_dev(body.affine_support(), 1.0) <= 1e-8);
  }
}

TEST_CASE("cached fields equal recomputation from the support function") {
  const auto body = make_random_body({.seed = 9});
  CHECK(body.cache_valid());

  const auto s = body.support_samples();
  const auto r = body.radius_of_curvature();
  const std::size_t n = s.size();
  std::vector<double> area_integrand(n), polar_integrand(n), g(n);
  for (std::size_t j = 0; j < n; ++j) {
    area_integrand[j] = 0.5 * s[j] * r[j];
    polar_integrand[j] = 0.5 / (s[j] * s[j]);
    g[j] = std::cbrt(r[j]) * std::cbrt(r[j]);
  }
  CHECK(body.area() == doctest::Approx(periodic_integral(area_integrand)).epsilon(1e-14));
  CHECK(body.polar_area() ==
        doctest::Approx(periodic_integral(polar_integrand)).epsilon(1e-14));
  CHECK(body.affine_perimeter() == doctest::Approx(periodic_integral(g)).epsilon(1e-14));
}

TEST_CASE("scaling a body dilates its support and respects the gate") {
  const auto body = make_random_body({.seed = 2});
  const auto doubled = body.scaled(2.0);
  CHECK(testing::max_abs_diff(doubled.support_samples(),
                              [&] {
                                std::vector<double> w(body.grid_size());
                                auto s = body.support_samples();
                                for (std::size_t j = 0; j < w.size(); ++j) w[j] = 2.0 * s[j];
                                return w;
                              }()) <= 1e-15);
  CHECK_THROWS_AS(body.scaled(0.0), std::invalid_argument);
  CHECK_THROWS_AS(body.scaled(-1.0), std::invalid_argument);
}

TEST_CASE("normalize_area rescales to area pi") {
  for (std::uint64_t seed : {1u, 5u}) {
    const auto body = make_random_body({.seed = seed}).scaled(1.7);
    CHECK(std::abs(normalize_area(body).area() - kPi) <= 1e-10);
  }
}
