#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alphaperim/geometry.hpp"
#include "alphaperim/rng.hpp"
#include "oracles.hpp"

using namespace alphaperim;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("disk_centers: diameter chord collapses to the midpoint") {
  const double alpha = 0.7;
  const DiskCenterPair c = disk_centers(Vec2(0, 0), Vec2(2 * alpha, 0), alpha);
  CHECK(c.degenerate);
  CHECK(c.plus.isApprox(Vec2(alpha, 0.0), 1e-15));
  CHECK(c.minus.isApprox(Vec2(alpha, 0.0), 1e-15));
}

TEST_CASE("disk_centers: right-angle chord puts centers at alpha/sqrt(2)") {
  const double alpha = 1.3;
  const DiskCenterPair c = disk_centers(Vec2(0, 0), Vec2(std::sqrt(2.0) * alpha, 0), alpha);
  const double s = alpha / std::sqrt(2.0);
  CHECK(!c.degenerate);
  CHECK(c.plus.x() == doctest::Approx(s).epsilon(1e-12));
  CHECK(std::abs(c.plus.y()) == doctest::Approx(s).epsilon(1e-12));
  CHECK(c.minus.y() == doctest::Approx(-c.plus.y()).epsilon(1e-12));
}

TEST_CASE("disk_centers: unit chord at alpha=0.6 matches the bisection oracle") {
  const DiskCenterPair c = disk_centers(Vec2(0, 0), Vec2(1, 0), 0.6);
  const double height = oracle::disk_center_height_bisection(0.5, 0.6);
  CHECK(height == doctest::Approx(0.33166247903554).epsilon(1e-10));
  CHECK(c.plus.x() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(c.plus.y()) == doctest::Approx(height).epsilon(1e-9));
}

TEST_CASE("disk_centers: rejects bad chords") {
  CHECK_THROWS_AS(disk_centers(Vec2(0, 0), Vec2(3, 0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(disk_centers(Vec2(1, 2), Vec2(1, 2), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(disk_centers(Vec2(0, 0), Vec2(1, 0), -1.0), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(disk_centers(Vec2(nan, 0), Vec2(1, 0), 1.0), std::invalid_argument);
}

TEST_CASE("disk_centers: random chords give radius-alpha mirror centers") {
  Xoshiro256pp rng(11);
  for (int it = 0; it < 2000; ++it) {
    const Vec2 a(rng.uniform(-5, 5), rng.uniform(-5, 5));
    const double alpha = rng.uniform(0.05, 4.0);
    const double d = rng.uniform(0.01, 1.0) * 2.0 * alpha;
    const double phi = rng.uniform(0.0, 2 * kPi);
    const Vec2 b = a + d * Vec2(std::cos(phi), std::sin(phi));
    const DiskCenterPair c = disk_centers(a, b, alpha);
    for (const Vec2& z : {c.plus, c.minus}) {
      CHECK(std::abs((z - a).norm() - alpha) <= kGeomEps);
      CHECK(std::abs((z - b).norm() - alpha) <= kGeomEps);
    }
    // Mirror images: midpoint on the chord line, difference orthogonal to it.
    const Vec2 mid = 0.5 * (c.plus + c.minus);
    const Vec2 dir = (b - a).normalized();
    CHECK(std::abs(cross2(mid - a, dir)) <= kGeomEps);
    if (!c.degenerate) {
      CHECK(std::abs((c.plus - c.minus).dot(dir)) <= kGeomEps);
    }
  }
}

TEST_CASE("angle_between_lines: axis cases") {
  CHECK(angle_between_lines(Vec2(1, 0), Vec2(0, 1)) == doctest::Approx(kPi / 2));
  CHECK(angle_between_lines(Vec2(1, 0), Vec2(-1, 0)) == doctest::Approx(0.0));
  CHECK(angle_between_lines(Vec2(1, 0), Vec2(1, 1)) == doctest::Approx(kPi / 4));
  CHECK_THROWS_AS(angle_between_lines(Vec2(0, 0), Vec2(1, 0)), std::invalid_argument);
}

TEST_CASE("angle_between_lines: symmetric and sign-blind") {
  Xoshiro256pp rng(12);
  for (int it = 0; it < 500; ++it) {
    const Vec2 u(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vec2 v(rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (u.norm() < 1e-3 || v.norm() < 1e-3) continue;
    const double base = angle_between_lines(u, v);
    CHECK(base >= 0.0);
    CHECK(base <= kPi / 2 + 1e-15);
    CHECK(angle_between_lines(v, u) == doctest::Approx(base).epsilon(1e-12));
    CHECK(angle_between_lines(-u, v) == doctest::Approx(base).epsilon(1e-12));
    CHECK(angle_between_lines(u, -v) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("cap_area: closed-form values") {
  CHECK(cap_area(1.0, 1.0) == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(cap_area(0.3, 0.3) == doctest::Approx(kPi * 0.09 / 2).epsilon(1e-14));
  CHECK(cap_area(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(cap_area(1.0, 2.0) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK_THROWS_AS(cap_area(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(cap_area(1.0, 2.1), std::invalid_argument);
}

TEST_CASE("cap_area: matches quadrature of the defining integral") {
  CHECK(cap_area(1.0, 0.5) == doctest::Approx(0.614184849).epsilon(1e-8));
  Xoshiro256pp rng(13);
  for (int it = 0; it < 60; ++it) {
    const double alpha = rng.uniform(0.1, 3.0);
    const double h = rng.uniform(0.0, 2.0 * alpha);
    CHECK(cap_area(alpha, h) ==
          doctest::Approx(oracle::cap_area_quadrature(alpha, h)).epsilon(1e-8));
  }
}

TEST_CASE("cap_area: strictly increasing in height") {
  for (double alpha : {0.2, 1.0, 2.5}) {
    double prev = -1.0;
    for (int k = 0; k <= 400; ++k) {
      const double v = cap_area(alpha, 2.0 * alpha * k / 400.0);
      CHECK(v > prev);
      prev = v;
    }
    CHECK(cap_area(alpha, 2.0 * alpha) == doctest::Approx(kPi * alpha * alpha).epsilon(1e-12));
  }
}

TEST_CASE("cap_area: h^(3/2) lower bound holds on a grid") {
  for (int ai = 1; ai <= 10; ++ai) {
    const double alpha = ai / 10.0;
    const double constant = 32.0 * std::sqrt(2.0 * alpha) / (3.0 * kPi * kPi);
    for (int hi = 1; hi <= 40; ++hi) {
      const double h = alpha * hi / 40.0;
      CHECK(2.0 * cap_area(alpha, h) >= constant * std::pow(h, 1.5));
    }
  }
}

TEST_CASE("arc_length_for_chord: closed-form values and bounds") {
  CHECK(arc_length_for_chord(0.8, 1.6) == doctest::Approx(kPi * 0.8).epsilon(1e-14));
  CHECK(arc_length_for_chord(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(arc_length_for_chord(1.0, 1.0) == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK_THROWS_AS(arc_length_for_chord(1.0, 2.5), std::invalid_argument);

  // Cubic remainder: 0 <= arc - chord <= chord^3 / (16 alpha^2) for chord <= alpha.
  for (double alpha : {0.25, 1.0, 2.0}) {
    for (int k = 1; k <= 100; ++k) {
      const double ell = alpha * k / 100.0;
      const double excess = arc_length_for_chord(alpha, ell) - ell;
      CHECK(excess >= 0.0);
      CHECK(excess <= ell * ell * ell / (16.0 * alpha * alpha));
    }
  }
}
