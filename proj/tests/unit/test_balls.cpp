#include "balls.hpp"
#include "flow.hpp"
#include "shapes.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace abrade;

TEST_CASE("inscribed ball of the unit square") {
  const auto b = inscribed_ball(shapes::rectangle(1, 1));
  CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((b.center - make_point(0.5, 0.5)).norm() < 1e-10);
  CHECK(b.unique_center);
  CHECK(b.active.size() == 4);
}

TEST_CASE("inscribed ball of a 2x1 rectangle has a segment of centres") {
  const auto b = inscribed_ball(shapes::rectangle(2, 1));
  CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b.center.y() == doctest::Approx(0.5));
  CHECK(b.center.x() >= 0.5 - 1e-10);
  CHECK(b.center.x() <= 1.5 + 1e-10);
  CHECK_FALSE(b.unique_center);
}

TEST_CASE("inscribed ball of the unit cube") {
  const auto b = inscribed_ball(shapes::unit_cube());
  CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((b.center - Vec3::Constant(0.5)).norm() < 1e-10);
  CHECK(b.unique_center);
}

TEST_CASE("inscribed ball satisfies every facet constraint") {
  for (int seed = 0; seed < 40; ++seed) {
    const auto k = seed % 2 ? shapes::random_hull2(25, seed) : shapes::random_hull3(30, seed);
    const auto b = inscribed_ball(k);
    for (const auto& f : k.facets()) CHECK(f.plane.normal.dot(b.center) + b.radius <= f.plane.offset + 1e-9);
    for (int i : b.active) CHECK(std::abs(k.facet(i).plane.slack(b.center) - b.radius) <= 1e-9);
    CHECK(b.active.size() >= std::size_t(k.dim()));
  }
}

TEST_CASE("enclosing balls") {
  const auto seg = enclosing_ball(2, std::vector<Vec3>{make_point(0, 0), make_point(2, 0)});
  CHECK((seg.center - make_point(1, 0)).norm() < 1e-12);
  CHECK(seg.radius == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<Vec3> tri = {make_point(0, 0), make_point(1, 0), make_point(0.5, std::sqrt(3.0) / 2)};
  CHECK(enclosing_ball(2, tri).radius == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));

  CHECK(enclosing_ball(shapes::unit_cube()).radius == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("enclosing ball is order and duplicate invariant") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = shapes::random_hull3(40, trial);
    std::vector<Vec3> pts(k.vertices().begin(), k.vertices().end());
    const auto ref = enclosing_ball(3, pts);
    for (const auto& p : pts) CHECK((p - ref.center).norm() <= ref.radius + 1e-9);
    auto shuffled = pts;
    shuffled.insert(shuffled.end(), pts.begin(), pts.begin() + 5);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto other = enclosing_ball(3, shuffled);
    CHECK(other.radius == doctest::Approx(ref.radius).epsilon(1e-12));
    CHECK((other.center - ref.center).norm() < 1e-10);
  }
}

TEST_CASE("enclosing ball is minimal against a grid search") {
  // No centre on a fine grid around the optimum does better.
  for (int seed = 0; seed < 10; ++seed) {
    const auto k = shapes::random_hull2(12, seed);
    const auto b = enclosing_ball(k);
    double best = INFINITY;
    for (int i = -50; i <= 50; ++i) {
      for (int j = -50; j <= 50; ++j) {
        const Vec3 c = b.center + make_point(i * 2e-3, j * 2e-3);
        double r = 0;
        for (const auto& v : k.vertices()) r = std::max(r, (v - c).norm());
        best = std::min(best, r);
      }
    }
    CHECK(b.radius <= best + 1e-12);
  }
}

TEST_CASE("asphericity values") {
  CHECK(asphericity(shapes::rectangle(1, 1)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(asphericity(shapes::rectangle(2, 1)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  const double a256 = asphericity(shapes::regular_ngon(256));
  CHECK(a256 == doctest::Approx(1.0 / std::cos(std::numbers::pi / 256)).epsilon(1e-12));
  CHECK(a256 - 1.0 < 1e-4);
}

TEST_CASE("asphericity grows along the flow and the inradius drops linearly") {
  for (int seed = 0; seed < 20; ++seed) {
    const auto k = seed % 2 ? shapes::random_hull2(30, seed) : shapes::random_hull3(40, seed);
    const double r = inscribed_ball(k).radius;
    double prev = asphericity(k);
    CHECK(prev >= 1.0);
    for (double t : uniform_grid(0.95 * r, 15)) {
      const auto kt = inner_parallel(k, t);
      CHECK(std::abs(inscribed_ball(kt).radius - (r - t)) <= 1e-8);
      const double a = asphericity(kt);
      CHECK(a >= prev - 1e-9);
      prev = a;
    }
  }
}
