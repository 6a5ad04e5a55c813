#include "shapes.hpp"

#include "hull.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace abrade::shapes {

ConvexBody box2(double x0, double y0, double x1, double y1) {
  const std::vector<Vec3> p = {make_point(x0, y0), make_point(x1, y0), make_point(x1, y1),
                               make_point(x0, y1)};
  return hull2(p);
}

ConvexBody rectangle(double w, double h) { return box2(0.0, 0.0, w, h); }

ConvexBody unit_cube() {
  std::vector<Vec3> p;
  for (int i = 0; i < 8; ++i) p.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  return hull3(p);
}

ConvexBody regular_ngon(int n, double circumradius) {
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "a polygon needs at least 3 sides");
  std::vector<Vec3> p;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    p.push_back(make_point(circumradius * std::cos(a), circumradius * std::sin(a)));
  }
  return hull2(p);
}

ConvexBody cut_square() {
  const std::vector<Vec3> p = {make_point(-2, -2), make_point(2, -2), make_point(2, 1),
                               make_point(1, 2), make_point(-2, 2)};
  return hull2(p);
}

ConvexBody corner_simplex() {
  const std::vector<Vec3> p = {Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  return hull3(p);
}

ConvexBody regular_tetrahedron() {
  const std::vector<Vec3> p = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return hull3(p);
}

ConvexBody ellipse_polygon(int n, double a, double b) {
  if (n < 3 || !(a > 0.0) || !(b > 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "bad ellipse parameters");
  }
  std::vector<Vec3> p;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * std::numbers::pi * k / n;
    p.push_back(make_point(a * std::cos(s), b * std::sin(s)));
  }
  return hull2(p);
}

ConvexBody random_hull2(int count, std::uint64_t seed) {
  if (count < 3) throw GeometryError(ErrorCode::InvalidArgument, "need at least 3 points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> p;
  while (int(p.size()) < count) {
    const Vec3 q = make_point(u(rng), u(rng));
    if (q.squaredNorm() <= 1.0) p.push_back(q);
  }
  return hull2(p);
}

ConvexBody random_hull3(int count, std::uint64_t seed) {
  if (count < 4) throw GeometryError(ErrorCode::InvalidArgument, "need at least 4 points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> p;
  while (int(p.size()) < count) {
    const Vec3 q(u(rng), u(rng), u(rng));
    if (q.squaredNorm() <= 1.0) p.push_back(q);
  }
  return hull3(p);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw GeometryError(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  }
  return v;
}

int count(const std::string& s) {
  const double v = number(s);
  if (v != std::floor(v) || v < 0 || v > 1e7) {
    throw GeometryError(ErrorCode::InvalidArgument, "not a count: '" + s + "'");
  }
  return int(v);
}

}  // namespace

ConvexBody generate(const std::string& name, std::uint64_t seed) {
  const auto parts = split(name, ':');
  if (parts.empty()) throw GeometryError(ErrorCode::InvalidArgument, "empty generator name");
  const std::string& kind = parts[0];
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw GeometryError(ErrorCode::InvalidArgument, "wrong number of parameters for '" + kind + "'");
    }
  };
  if (kind == "square") {
    want(1, 1);
    return rectangle(1.0, 1.0);
  }
  if (kind == "cube") {
    want(1, 1);
    return unit_cube();
  }
  if (kind == "cut-square") {
    want(1, 1);
    return cut_square();
  }
  if (kind == "tetrahedron") {
    want(1, 1);
    return corner_simplex();
  }
  if (kind == "regular-tetrahedron") {
    want(1, 1);
    return regular_tetrahedron();
  }
  if (kind == "rect") {
    want(2, 2);
    const auto wh = split(parts[1], 'x');
    if (wh.size() != 2) throw GeometryError(ErrorCode::InvalidArgument, "rect expects WxH");
    const double w = number(wh[0]), h = number(wh[1]);
    if (!(w > 0.0) || !(h > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "rect sides must be positive");
    return rectangle(w, h);
  }
  if (kind == "regular-ngon") {
    want(2, 2);
    return regular_ngon(count(parts[1]));
  }
  if (kind == "ellipse") {
    want(4, 4);
    return ellipse_polygon(count(parts[1]), number(parts[2]), number(parts[3]));
  }
  if (kind == "random-hull" || kind == "random-hull3") {
    want(2, 3);
    std::uint64_t s = parts.size() == 3 ? std::uint64_t(count(parts[2])) : 1;
    if (seed != 0) s = seed;
    const int n = count(parts[1]);
    return kind == "random-hull" ? random_hull2(n, s) : random_hull3(n, s);
  }
  throw GeometryError(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
}

}  // namespace abrade::shapes
