#ifndef ABRADE_BALLS_HPP
#define ABRADE_BALLS_HPP

#include "convex_body.hpp"

#include <span>
#include <vector>

namespace abrade {

struct BallResult {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  /// Inscribed: facets tight at the optimum. Enclosing: support points.
  std::vector<int> active;
  /// Inscribed only: false when the set of optimal centers has positive size.
  bool unique_center = true;
};

/// Largest inscribed (Chebyshev) ball by linear programming over the facet
/// halfspaces.
BallResult inscribed_ball(const ConvexBody& body);

/// Same LP over an explicit halfspace list; `feasible` must satisfy every
/// halfspace.
BallResult inscribed_ball(int dim, std::span<const HalfSpace> halfspaces, const Vec3& feasible);

/// Smallest enclosing ball of the vertex set (Welzl, deterministic order).
BallResult enclosing_ball(const ConvexBody& body);
BallResult enclosing_ball(int dim, std::span<const Vec3> points);

/// R(K) / r(K).
double asphericity(const ConvexBody& body);

/// Extent of the set of optimal Chebyshev centers along each coordinate
/// axis, i.e. max - min of c_j over {c : <a_i, c> + r* <= b_i}.
Vec3 optimal_center_extent(int dim, std::span<const HalfSpace> halfspaces, const BallResult& ball);

}  // namespace abrade

#endif  // ABRADE_BALLS_HPP
