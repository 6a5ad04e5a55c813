#ifndef ABRADE_TEST_ORACLES_HPP
#define ABRADE_TEST_ORACLES_HPP

#include "convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using abrade::ConvexBody;
using abrade::Vec3;

inline Vec3 random_direction(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vec3 u(g(rng), g(rng), dim == 3 ? g(rng) : 0.0);
  return u.normalized();
}

/// Brute-force support value: max over vertices.
inline double support(const ConvexBody& k, const Vec3& u) {
  double best = -INFINITY;
  for (const auto& v : k.vertices()) best = std::max(best, v.dot(u));
  return best;
}

/// Shoelace directly on the vertex ring.
inline double polygon_area(const std::vector<Vec3>& p) {
  double a = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& q = p[(i + 1) % p.size()];
    a += p[i].x() * q.y() - q.x() * p[i].y();
  }
  return 0.5 * a;
}

/// Distance from p to the closest point of the polygon boundary.
inline double boundary_distance(const ConvexBody& k, const Vec3& p) {
  const auto v = k.vertices();
  double best = INFINITY;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec3 a = v[i], b = v[(i + 1) % v.size()];
    const double s = std::clamp((p - a).dot(b - a) / (b - a).squaredNorm(), 0.0, 1.0);
    best = std::min(best, (a + s * (b - a) - p).norm());
  }
  return best;
}

/// Radial function of a 2D body about an interior point, by ray casting
/// against every facet line.
inline double ray_radius(const ConvexBody& k, const Vec3& ref, double phi) {
  const Vec3 d(std::cos(phi), std::sin(phi), 0.0);
  double best = INFINITY;
  for (const auto& f : k.facets()) {
    const double den = f.plane.normal.dot(d);
    if (den > 1e-300) best = std::min(best, f.plane.slack(ref) / den);
  }
  return best;
}

/// Critical points of the radial distance by dense angular sampling: the
/// number of strict sign changes of the discrete derivative of r(phi).
inline int sampled_critical_count(const ConvexBody& k, const Vec3& ref, int samples = 100000) {
  std::vector<double> r(samples);
  for (int i = 0; i < samples; ++i) {
    r[i] = ray_radius(k, ref, 2.0 * std::numbers::pi * i / samples);
  }
  std::vector<int> sign;
  for (int i = 0; i < samples; ++i) {
    const double dr = r[(i + 1) % samples] - r[i];
    if (dr > 0) sign.push_back(1);
    else if (dr < 0) sign.push_back(-1);
  }
  int changes = 0;
  for (std::size_t i = 0; i < sign.size(); ++i)
    if (sign[i] != sign[(i + 1) % sign.size()]) ++changes;
  return changes;
}

}  // namespace oracle

#endif  // ABRADE_TEST_ORACLES_HPP
