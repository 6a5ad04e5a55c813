#include "flow.hpp"
#include "hull.hpp"
#include "kernel.hpp"
#include "shapes.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace abrade;

namespace {

bool same_vertices(const ConvexBody& a, const ConvexBody& b, double tol) {
  if (a.vertices().size() != b.vertices().size()) return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i)
    if ((a.vertex(i) - b.vertex(i)).norm() > tol) return false;
  return true;
}

std::vector<Vec3> disk_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Vec3> p;
  while (int(p.size()) < n) {
    Vec3 q = make_point(u(rng), u(rng));
    if (q.squaredNorm() <= 1) p.push_back(q);
  }
  return p;
}

}  // namespace

TEST_CASE("hull2 drops interior points and orders CCW") {
  const std::vector<Vec3> p = {make_point(0, 0), make_point(1, 0), make_point(1, 1), make_point(0, 1),
                               make_point(0.5, 0.5)};
  const auto k = hull2(p);
  CHECK(k.vertices().size() == 4);
  CHECK(validate(k).empty());
  CHECK(oracle::polygon_area({k.vertices().begin(), k.vertices().end()}) == doctest::Approx(1.0));
}

TEST_CASE("hull2 keeps an existing rectangle") {
  const auto k = shapes::rectangle(2, 1);
  CHECK(k.vertices().size() == 4);
  CHECK(k.facets().size() == 4);
  CHECK(validate(k).empty());
}

TEST_CASE("hull2 rejects collinear and tiny inputs") {
  const std::vector<Vec3> line = {make_point(0, 0), make_point(1, 1), make_point(2, 2)};
  CHECK_THROWS_AS(hull2(line), GeometryError);
  const std::vector<Vec3> two = {make_point(0, 0), make_point(1, 0), make_point(1, 0)};
  CHECK_THROWS_AS(hull2(two), GeometryError);
}

TEST_CASE("hull2 is idempotent on random disk samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = hull2(disk_points(rng, 100));
    REQUIRE(validate(k).empty());
    const auto again = hull2(k.vertices());
    CHECK(same_vertices(k, again, 0.0));
  }
}

TEST_CASE("hull2 keeps corners when several sums share a supporting line up to roundoff") {
  // Sums of an inset rectangle and the square hit the right edge with
  // x-coordinates that differ in the last bit; the corner must survive.
  const std::vector<Vec3> pts = {
      make_point(0.78888888888888897, -0.21111111111111114), make_point(2.7888888888888888, -0.21111111111111114),
      make_point(2.7888888888888888, 1.7888888888888888),   make_point(0.78888888888888897, 1.7888888888888888),
      make_point(2.7888888888888892, -0.78888888888888897), make_point(2.7888888888888892, 1.211111111111111),
      make_point(-0.78888888888888886, -0.78888888888888886), make_point(-0.78888888888888886, 1.7888888888888888),
  };
  const auto h = hull2(pts);
  CHECK(h.vertices().size() == 4);
  CHECK(std::abs(oracle::polygon_area({h.vertices().begin(), h.vertices().end()}) - (2.7888888888888888 + 0.78888888888888886) *
                                                          (1.7888888888888888 + 0.78888888888888886)) < 1e-12);

  const auto square = shapes::box2(-1, -1, 1, 1);
  for (int i = 1; i < 400; ++i) {
    const double t = 0.49 * i / 400.0;
    const auto k = shapes::box2(t, t, 2 - t, 1 - t);
    for (double s : {0.5, 1.0, 2.0}) {
      const auto m = minkowski_sum(k, scaled(square, s));
      CHECK(m.vertices().size() == 4);
      CHECK(std::abs(oracle::polygon_area({m.vertices().begin(), m.vertices().end()}) - (2 - 2 * t + 2 * s) * (1 - 2 * t + 2 * s)) < 1e-12);
    }
  }
}

TEST_CASE("hull3 of the cube corners") {
  const auto k = shapes::unit_cube();
  CHECK(k.vertices().size() == 8);
  CHECK(k.edges().size() == 12);
  CHECK(k.facets().size() == 6);
  CHECK(validate(k).empty());
}

TEST_CASE("hull3 of the corner simplex") {
  const auto k = shapes::corner_simplex();
  CHECK(k.facets().size() == 4);
  CHECK(validate(k).empty());
}

TEST_CASE("hull3 rejects coplanar input") {
  const std::vector<Vec3> p = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.3, 0.2, 0}};
  CHECK_THROWS_AS(hull3(p), GeometryError);
}

TEST_CASE("hull3 on random sphere and ball samples satisfies Euler and idempotence") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec3> p;
    for (int i = 0; i < 50; ++i) p.push_back(oracle::random_direction(rng, 3));
    const auto k = hull3(p);
    REQUIRE(validate(k).empty());
    const long v = long(k.vertices().size()), e = long(k.edges().size()), f = long(k.facets().size());
    CHECK(v - e + f == 2);
    CHECK(v == 50);
    CHECK(same_vertices(k, hull3(k.vertices()), 0.0));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = shapes::random_hull3(60, 1000 + trial);
    REQUIRE(validate(k).empty());
    CHECK(same_vertices(k, hull3(k.vertices()), 0.0));
  }
}

TEST_CASE("hull3 merges the coplanar facets of Minkowski sums") {
  const auto cube = shapes::unit_cube();
  const auto sum = minkowski_sum(cube, scaled(cube, 0.37));
  CHECK(validate(sum).empty());
  CHECK(sum.facets().size() == 6);
  CHECK(sum.vertices().size() == 8);
}

TEST_CASE("hull3 absorbs sliver facets of a nearly homothetic Minkowski sum") {
  // A body plus a small multiple of its form body has parallelogram facets
  // far narrower than the default merge tolerance.
  const auto k = shapes::random_hull3(54, 13027778290240746028ull);
  const auto f = form_body(k);
  const double s = 1.0 / 19.0;
  const auto a = scaled(k, 1.0 - s), b = scaled(f, s);
  const auto sum = minkowski_sum(a, b);
  REQUIRE(validate(sum).empty());
  CHECK(long(sum.vertices().size()) - long(sum.edges().size()) + long(sum.facets().size()) == 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Vec3 u = oracle::random_direction(rng, 3);
    CHECK(support(sum, u).value == doctest::Approx(support(a, u).value + support(b, u).value).epsilon(1e-7));
  }
}

TEST_CASE("halfspace intersection of axis halfspaces") {
  const std::vector<HalfSpace> sq = {{make_point(1, 0), 1}, {make_point(-1, 0), 0},
                                     {make_point(0, 1), 1}, {make_point(0, -1), 0}};
  const auto k = halfspace_intersection(2, sq, make_point(0.5, 0.5));
  CHECK(validate(k).empty());
  CHECK(same_vertices(k, shapes::rectangle(1, 1), 1e-12));

  std::vector<HalfSpace> cube;
  for (int j = 0; j < 3; ++j) {
    Vec3 e = Vec3::Zero();
    e[j] = 1;
    cube.push_back({e, 1});
    cube.push_back({-e, 0});
  }
  const auto c = halfspace_intersection(3, cube, Vec3::Constant(0.5));
  CHECK(validate(c).empty());
  CHECK(same_vertices(c, shapes::unit_cube(), 1e-12));
}

TEST_CASE("halfspace intersection drops redundant halfspaces") {
  std::vector<HalfSpace> hs = {{make_point(1, 0), 1}, {make_point(-1, 0), 0},
                               {make_point(0, 1), 1}, {make_point(0, -1), 0},
                               {make_point(1, 1).normalized(), 5 / std::sqrt(2.0)}};
  const auto k = halfspace_intersection(2, hs, make_point(0.5, 0.5));
  CHECK(k.facets().size() == 4);
  // redundancy oracle: a halfspace is essential iff its plane supports the result
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const bool supports = std::abs(oracle::support(k, hs[i].normal) - hs[i].offset) < 1e-12;
    bool kept = false;
    for (const auto& f : k.facets()) kept |= f.source == int(i);
    CHECK(supports == kept);
  }
}

TEST_CASE("halfspace intersection error cases") {
  const std::vector<HalfSpace> slab = {{make_point(0, 1), 1}, {make_point(0, -1), 0}};
  CHECK_THROWS_AS(halfspace_intersection(2, slab, make_point(0, 0.5)), GeometryError);
  try {
    halfspace_intersection(2, slab, make_point(0, 0.5));
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::Unbounded);
  }
  const std::vector<HalfSpace> sq = {{make_point(1, 0), 1}, {make_point(-1, 0), 0},
                                     {make_point(0, 1), 1}, {make_point(0, -1), 0}};
  try {
    halfspace_intersection(2, sq, make_point(2, 2));
    FAIL("expected an error");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::EmptyOrLowerDim);
  }
}

TEST_CASE("facet halfspaces reproduce the body") {
  for (int seed = 0; seed < 30; ++seed) {
    for (const auto& k : {shapes::random_hull2(30, seed), shapes::random_hull3(40, seed)}) {
      const auto hs = k.halfspaces();
      const auto again = halfspace_intersection(k.dim(), hs, k.vertex_centroid());
      CHECK(validate(again).empty());
      CHECK(same_vertices(k, again, 1e-9));
    }
  }
}

TEST_CASE("support values") {
  CHECK(support(shapes::rectangle(1, 1), make_point(1, 0)).value == 1.0);
  CHECK(support(shapes::rectangle(2, 1), make_point(0, 1)).value == 1.0);
}

TEST_CASE("support is sublinear") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lam(0.01, 10);
  for (int seed = 0; seed < 10; ++seed) {
    const auto k = shapes::random_hull3(30, seed);
    for (int i = 0; i < 100; ++i) {
      const Vec3 u = oracle::random_direction(rng, 3), w = oracle::random_direction(rng, 3);
      const double l = lam(rng);
      CHECK(support(k, u + w).value <= support(k, u).value + support(k, w).value + 1e-10);
      CHECK(support(k, l * u).value == doctest::Approx(l * support(k, u).value).epsilon(1e-10));
    }
  }
}

TEST_CASE("Minkowski sums") {
  const auto s = minkowski_sum(shapes::rectangle(1, 1), shapes::box2(-1, -1, 1, 1));
  CHECK(same_vertices(s, shapes::box2(-1, -1, 2, 2), 1e-12));

  const auto rect = shapes::rectangle(2, 1);
  for (double t : {0.1, 0.5, 2.0}) {
    const auto sum = minkowski_sum(rect, scaled(shapes::box2(-1, -1, 1, 1), t));
    const std::vector<Vec3> ring(sum.vertices().begin(), sum.vertices().end());
    CHECK(oracle::polygon_area(ring) == doctest::Approx((2 + 2 * t) * (1 + 2 * t)).epsilon(1e-12));
  }

  const auto tri = shapes::regular_ngon(3);
  const auto moved = minkowski_sum(tri, ConvexBody::singleton(2, make_point(3, -1)));
  CHECK(same_vertices(moved, translated(tri, make_point(3, -1)), 1e-12));

  CHECK_THROWS_AS(minkowski_sum(tri, shapes::unit_cube()), GeometryError);
}

TEST_CASE("Minkowski support additivity") {
  std::mt19937_64 rng(8);
  for (int seed = 0; seed < 10; ++seed) {
    for (int dim : {2, 3}) {
      const auto a = dim == 2 ? shapes::random_hull2(20, seed) : shapes::random_hull3(25, seed);
      const auto b = dim == 2 ? shapes::random_hull2(15, seed + 50) : shapes::random_hull3(20, seed + 50);
      const auto s = minkowski_sum(a, b);
      REQUIRE(validate(s).empty());
      for (int i = 0; i < 100; ++i) {
        const Vec3 u = oracle::random_direction(rng, dim);
        CHECK(std::abs(oracle::support(s, u) - oracle::support(a, u) - oracle::support(b, u)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("homothety detection") {
  const auto h = homothety_check(shapes::rectangle(1, 1), shapes::box2(2, 2, 4, 4));
  REQUIRE(h.has_value());
  CHECK(h->ratio == doctest::Approx(2.0));
  CHECK((h->translation - make_point(2, 2)).norm() < 1e-9);

  CHECK_FALSE(homothety_check(shapes::rectangle(1, 1), shapes::rectangle(2, 1)).has_value());

  // Inner parallel body of a triangle with inradius r0 at offset t is the
  // triangle scaled by (r0 - t) / r0 about the incentre.
  const auto tri = shapes::regular_ngon(3);
  const double r0 = 0.5;
  const auto inner = scaled(tri, (r0 - 0.2) / r0);
  const auto hh = homothety_check(tri, inner);
  REQUIRE(hh.has_value());
  CHECK(hh->ratio == doctest::Approx(0.6));
  CHECK(hh->ratio < 1.0);

  const auto cube = shapes::unit_cube();
  const auto big = translated(scaled(cube, 3.0), Vec3(1, 2, 3));
  const auto hc = homothety_check(cube, big);
  REQUIRE(hc.has_value());
  CHECK(hc->ratio == doctest::Approx(3.0));
  CHECK((hc->translation - Vec3(1, 2, 3)).norm() < 1e-9);
}
