#include "balls.hpp"
#include "flow.hpp"
#include "kernel.hpp"
#include "measures.hpp"
#include "shapes.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace abrade;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force width maximization over a fine direction grid.
double grid_max_width(const ConvexBody& k, const Vec3& axis, int samples) {
  const Vec3 seed = std::abs(axis.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = axis.cross(seed).normalized(), e2 = axis.cross(e1);
  double best = 0;
  for (int i = 0; i < samples; ++i) {
    const double a = kPi * i / samples;
    const Vec3 u = std::cos(a) * e1 + std::sin(a) * e2;
    best = std::max(best, oracle::support(k, u) + oracle::support(k, -u));
  }
  return best;
}

}  // namespace

TEST_CASE("volumes and areas") {
  CHECK(volume(shapes::unit_cube()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(volume(shapes::corner_simplex()) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(volume(shapes::rectangle(2, 1)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(surface_area(shapes::unit_cube()) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(surface_area(shapes::rectangle(2, 1)) == doctest::Approx(6.0).epsilon(1e-14));
  const double p256 = surface_area(shapes::regular_ngon(256));
  CHECK(p256 == doctest::Approx(2 * 256 * std::sin(kPi / 256)).epsilon(1e-12));
  CHECK(std::abs(p256 - 2 * kPi) < 3e-4);
}

TEST_CASE("isoperimetric quotients") {
  CHECK(iq(shapes::rectangle(1, 1)) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(iq(shapes::rectangle(2, 1)) == doctest::Approx(1.0 / 18).epsilon(1e-14));
  CHECK(std::abs(iq(ball_polytope(2, 256)) - 1 / (4 * kPi)) < 1e-5);
}

TEST_CASE("scaling laws") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lam(0.1, 10);
  for (int seed = 0; seed < 20; ++seed) {
    const auto k = seed % 2 ? shapes::random_hull2(20, seed) : shapes::random_hull3(25, seed);
    const double l = lam(rng);
    const auto s = scaled(k, l);
    const int d = k.dim();
    CHECK(volume(s) == doctest::Approx(std::pow(l, d) * volume(k)).epsilon(1e-10));
    CHECK(surface_area(s) == doctest::Approx(std::pow(l, d - 1) * surface_area(k)).epsilon(1e-10));
    CHECK(std::abs(iq(s) - iq(k)) <= 1e-10);
  }
}

TEST_CASE("Steiner rows") {
  const auto w = steiner(shapes::unit_cube()).w;
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(w[3] == doctest::Approx(4 * kPi / 3).epsilon(1e-12));

  // 1 + 4s + pi s^2 for the unit square
  const auto sq = steiner(shapes::rectangle(1, 1)).w;
  CHECK(sq[0] == doctest::Approx(1.0));
  CHECK(2 * sq[1] == doctest::Approx(4.0));
  CHECK(sq[2] == doctest::Approx(kPi));

  for (int seed = 0; seed < 20; ++seed) {
    const auto k = seed % 2 ? shapes::random_hull2(20, seed) : shapes::random_hull3(25, seed);
    CHECK(k.dim() * steiner(k).w[1] == doctest::Approx(surface_area(k)).epsilon(1e-9));
  }
}

TEST_CASE("Steiner row against the ball-polytope fit") {
  for (const auto& k : {shapes::unit_cube(), shapes::random_hull3(20, 4)}) {
    const auto w = steiner(k).w;
    const auto fit = mixed_volumes(k, ball_polytope(3, 5120)).v;
    for (int j = 0; j < 4; ++j) CHECK(std::abs(fit[j] - w[j]) <= 2e-3 * std::abs(w[j]));
  }
}

TEST_CASE("mixed volumes") {
  const auto row = mixed_volumes(shapes::rectangle(2, 1), shapes::box2(-1, -1, 1, 1)).v;
  CHECK(std::abs(row[0] - 2) <= 1e-10);
  CHECK(std::abs(row[1] - 3) <= 1e-10);
  CHECK(std::abs(row[2] - 4) <= 1e-10);
  const auto sq = mixed_volumes(shapes::rectangle(1, 1), shapes::box2(-1, -1, 1, 1)).v;
  CHECK(std::abs(sq[0] - 1) <= 1e-10);
  CHECK(std::abs(sq[1] - 2) <= 1e-10);
  CHECK(std::abs(sq[2] - 4) <= 1e-10);
  CHECK_THROWS_AS(mixed_volumes(shapes::rectangle(1, 1), shapes::unit_cube()), GeometryError);
}

TEST_CASE("mixed volume endpoints, refits and the surface identity") {
  for (int seed = 0; seed < 20; ++seed) {
    const auto k = seed % 2 ? shapes::random_hull2(20, seed) : shapes::random_hull3(25, seed);
    const auto f = form_body(k);
    const int d = k.dim();
    const auto row = mixed_volumes(k, f).v;
    CHECK(row[0] == doctest::Approx(volume(k)).epsilon(1e-10));
    CHECK(row[d] == doctest::Approx(volume(f)).epsilon(1e-9));
    CHECK(d * row[1] == doctest::Approx(surface_area(k)).epsilon(1e-9));
    std::vector<double> alt;
    for (int j = 0; j <= d; ++j) alt.push_back(0.5 * j);
    const auto refit = mixed_volumes(k, f, alt).v;
    for (int j = 0; j <= d; ++j) CHECK(std::abs(refit[j] - row[j]) < 1e-8);
    CHECK(minkowski_residual(k) >= -1e-9);
  }
}

TEST_CASE("Minkowski residual and the lower-bound derivative") {
  CHECK(std::abs(minkowski_residual(shapes::rectangle(2, 1)) - 1) <= 1e-9);
  CHECK(std::abs(minkowski_residual(shapes::rectangle(1, 1))) <= 1e-9);
  CHECK(std::abs(minkowski_residual(shapes::regular_tetrahedron())) <= 1e-9);
  CHECK(std::abs(minkowski_residual(shapes::unit_cube())) <= 1e-9);
  CHECK(std::abs(lower_bound_derivative(shapes::rectangle(2, 1)) + 1.0 / 54) <= 1e-9);
  CHECK(std::abs(lower_bound_derivative(shapes::rectangle(1, 1))) <= 1e-12);
  CHECK(std::abs(lower_bound_derivative(shapes::unit_cube())) <= 1e-12);
}

TEST_CASE("lower bound derivative matches a one-sided difference of the bound") {
  // I_bar(t) as t -> t0 from below, with the finest polygonal ball.
  const auto k0 = shapes::rectangle(2, 1);
  const double t0 = 0.3, h = 1e-4;
  const auto base = k0;
  const double at = lower_bound_iq(base, t0, t0, 4096);
  const double before = lower_bound_iq(base, t0, t0 - h, 4096);
  const double slope = (at - before) / h;
  CHECK(slope == doctest::Approx(lower_bound_derivative(k0)).epsilon(2e-2));
}

TEST_CASE("lower bound on the isoperimetric quotient") {
  const auto sq = shapes::rectangle(1, 1);
  CHECK(lower_bound_iq(sq, 0.2, 0.2, 64) == iq(sq));
  for (double t : {0.0, 0.1, 0.15}) CHECK(lower_bound_iq(sq, 0.2, t, 64) <= 1.0 / 16 + 1e-15);

  const auto disk = ball_polytope(2, 256);
  for (double t : {0.0, 0.1, 0.2}) {
    const double bound = lower_bound_iq(inner_parallel(disk, 0.3), 0.3, t, 256);
    const double actual = iq(inner_parallel(disk, t));
    CHECK(bound <= actual + 1e-6);
    CHECK(std::abs(bound - actual) < 1e-3);
  }
  for (int seed = 0; seed < 10; ++seed) {
    const auto k = seed % 2 ? shapes::random_hull2(20, seed) : shapes::random_hull3(25, seed);
    const double r = inscribed_ball(k).radius;
    const double t0 = 0.5 * r;
    const auto base = inner_parallel(k, t0);
    for (double t : {0.0, 0.25 * r}) {
      CHECK(lower_bound_iq(base, t0, t, k.dim() == 2 ? 256 : 1280) <= iq(inner_parallel(k, t)) + 2e-3);
    }
  }
}

TEST_CASE("axes") {
  const auto cube = axes(shapes::unit_cube());
  CHECK(cube.a == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(cube.c.has_value());
  CHECK(*cube.c <= cube.b + 1e-12);
  CHECK(cube.b <= cube.a + 1e-12);
  // brute force over 10^4 directions orthogonal to the main diagonal
  const double brute = grid_max_width(shapes::unit_cube(), Vec3::Ones().normalized(), 10000);
  CHECK(std::abs(cube.b - brute) < 1e-3);
  CHECK(cube.b >= brute - 1e-9);

  const auto thin = axes(shapes::rectangle(2, 0.1));
  CHECK(thin.a == doctest::Approx(std::sqrt(4.01)).epsilon(1e-12));
  CHECK(thin.b == doctest::Approx(2 * 2 * 0.1 / std::sqrt(4.01)).epsilon(1e-12));
  CHECK_FALSE(thin.c.has_value());

  const auto ball = axes(ball_polytope(3, 1280));
  CHECK(std::abs(ball.a - 2) < 3e-2);
  CHECK(std::abs(ball.b - 2) < 3e-2);
  CHECK(std::abs(*ball.c - 2) < 3e-2);
  const auto disk = axes(shapes::regular_ngon(1024));
  CHECK(std::abs(disk.a - 2) < 1e-3);
  CHECK(std::abs(disk.b - 2) < 1e-3);

  for (int seed = 0; seed < 5; ++seed) {
    const auto k = shapes::random_hull3(30, seed);
    const auto ax = axes(k);
    double diam = 0;
    Vec3 dir;
    for (const auto& p : k.vertices())
      for (const auto& q : k.vertices())
        if ((p - q).norm() > diam) {
          diam = (p - q).norm();
          dir = (p - q).normalized();
        }
    CHECK(ax.a == doctest::Approx(diam).epsilon(1e-14));
    CHECK(std::abs(ax.b - grid_max_width(k, dir, 10000)) < 1e-3);
    CHECK(*ax.c <= ax.b + 1e-12);
  }
}

TEST_CASE("normed isoperimetric quotient") {
  CHECK(normed_iq(shapes::rectangle(1, 1), shapes::box2(-1, -1, 1, 1)) == doctest::Approx(0.25).epsilon(1e-10));
  const auto ball = ball_polytope(2, 256);
  for (const auto& k : {shapes::rectangle(2, 1), shapes::random_hull2(20, 3)}) {
    CHECK(std::abs(normed_iq(k, ball) - iq(k) * 4) < 1e-4);
  }
  const auto hex = shapes::regular_ngon(6);
  const double base = normed_iq(hex, hex);
  CHECK(normed_iq(translated(scaled(hex, 0.3), make_point(1, 2)), hex) == doctest::Approx(base).epsilon(1e-10));
}
