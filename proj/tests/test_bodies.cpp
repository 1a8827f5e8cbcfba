#include <doctest.h>

#include <cmath>
#include <random>

#include "illum/bodies.hpp"
#include "test_helpers.hpp"

using namespace illum;

namespace {

SmoothBody unit_disk() { return SmoothBody::make_ball(Vec::Zero(2), 1.0); }

SmoothBody ellipse31() {
  Vec lengths(2);
  lengths << 3.0, 1.0;
  return SmoothBody::make_ellipsoid(Vec::Zero(2), Mat::Identity(2, 2), lengths);
}

}  // namespace

TEST_CASE("diameter of balls and ellipsoids") {
  CHECK(diameter(unit_disk()) == doctest::Approx(2.0));
  CHECK(diameter(ellipse31()) == doctest::Approx(6.0));
  CHECK(diameter(SmoothBody::make_ball(Vec::Zero(3), 0.5)) == doctest::Approx(1.0));
}

TEST_CASE("circumball of balls and ellipsoids") {
  BodyProfile ball = circumball(unit_disk());
  CHECK(ball.circumradius == doctest::Approx(1.0));
  CHECK(ball.circumcenter.norm() == doctest::Approx(0.0));

  BodyProfile ell = circumball(ellipse31());
  CHECK(ell.circumradius == doctest::Approx(3.0));

  Vec lengths = Vec::Constant(3, 2.0);
  SmoothBody round_ell =
      SmoothBody::make_ellipsoid(Vec::Zero(3), Mat::Identity(3, 3), lengths);
  CHECK(circumball(round_ell).circumradius == doctest::Approx(2.0));
}

TEST_CASE("jung bound values and consistency") {
  CHECK(jung_bound(2, 2.0) == doctest::Approx(2.0 / std::sqrt(3.0)));
  CHECK(jung_bound(3, 1.0) == doctest::Approx(std::sqrt(3.0 / 8.0)));
  // Balls saturate D = 2R and stay below the bound.
  BodyProfile p = circumball(unit_disk());
  CHECK(p.circumradius <= jung_bound(2, p.diameter) + 1e-9);
  BodyProfile e = circumball(ellipse31());
  CHECK(e.circumradius <= jung_bound(2, e.diameter) + 1e-9);
}

TEST_CASE("ball boundary samples sit on the sphere") {
  SmoothBody ball = SmoothBody::make_ball(Vec::Ones(3), 2.5);
  for (const BoundaryPoint& bp : sample_boundary(ball, 200, 7)) {
    CHECK((bp.point - ball.center()).norm() == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(bp.normal.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boundary sampling is deterministic per seed") {
  SmoothBody ball = unit_disk();
  auto a = sample_boundary(ball, 50, 42);
  auto b = sample_boundary(ball, 50, 42);
  for (int i = 0; i < 50; ++i) {
    CHECK((a[i].point - b[i].point).norm() == 0.0);
  }
}

TEST_CASE("sample count must be positive") {
  CHECK_THROWS_AS(sample_boundary(unit_disk(), 0, 1), std::invalid_argument);
}

TEST_CASE("support identity against interior points") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radial(0.0, 0.999);

  for (const SmoothBody& body : {ellipse31(), SmoothBody::make_ball(Vec::Ones(2), 1.7)}) {
    Mat shape = body.shape_matrix();
    std::vector<Vec> interior;
    for (int i = 0; i < 100; ++i) {
      Vec u(2);
      u << gauss(rng), gauss(rng);
      u.normalize();
      interior.push_back(body.center() + radial(rng) * (shape * u));
    }
    int violations = 0;
    for (const BoundaryPoint& bp : sample_boundary(body, 1000, 9)) {
      for (const Vec& z : interior) {
        if (bp.normal.dot(z - bp.point) > 1e-9) ++violations;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("half-space illumination test on the unit disk") {
  BoundaryPoint bp;
  bp.point = Vec(2);
  bp.point << 1.0, 0.0;
  bp.normal = bp.point;

  Vec x(2);
  x << 2.0, 5.0;
  IlluminationTest hit = illuminates(x, bp);
  CHECK(hit.illuminated);
  CHECK(hit.margin == doctest::Approx(1.0));

  x << 0.0, 3.0;
  IlluminationTest miss = illuminates(x, bp);
  CHECK_FALSE(miss.illuminated);
  CHECK(miss.margin == doctest::Approx(-1.0));

  // Tangent ray: the criterion is strict.
  x << 1.0, 7.0;
  IlluminationTest tangent = illuminates(x, bp);
  CHECK_FALSE(tangent.illuminated);
  CHECK(tangent.margin == doctest::Approx(0.0));
}

TEST_CASE("illumination margin scales along the ray") {
  std::mt19937_64 rng(15);
  SmoothBody ball = unit_disk();
  auto points = sample_boundary(ball, 25, 3);
  std::uniform_real_distribution<double> stretch(1.1, 5.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const BoundaryPoint& bp : points) {
    Vec x(2);
    x << gauss(rng) * 3, gauss(rng) * 3;
    IlluminationTest base = illuminates(x, bp);
    if (!base.illuminated) continue;
    double t = stretch(rng);
    Vec further = bp.point + t * (x - bp.point);
    IlluminationTest scaled = illuminates(further, bp);
    CHECK(scaled.illuminated);
    CHECK(scaled.margin == doctest::Approx(t * base.margin).epsilon(1e-9));
  }
}
