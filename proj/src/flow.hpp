#ifndef ABRADE_FLOW_HPP
#define ABRADE_FLOW_HPP

#include "balls.hpp"
#include "convex_body.hpp"

#include <optional>
#include <span>
#include <vector>

namespace abrade {

/// Tolerance on |gap - r| for a facet to count as touching the inscribed
/// ball, relative to the body scale.
inline constexpr double kTangentTol = 1e-9;

struct FlowSample {
  double t = 0.0;
  ConvexBody body;
  /// Facet indices of the initial body whose halfspaces still carry a facet.
  std::vector<int> surviving_normals;
};

struct EnvelopeResult {
  std::vector<HalfSpace> halfspaces;
  bool bounded = false;
  std::optional<ConvexBody> body;
};

struct ComparisonBodies {
  ConvexBody inner;  // L(t) = K0 + (t0 - t) B
  ConvexBody outer;  // M(t) = K0 + (t0 - t) F(K0)
};

/// K(t): every facet halfspace moved inward by t. Facet::source of the
/// result indexes the facets of K. Throws EmptyBody for t >= r(K).
ConvexBody inner_parallel(const ConvexBody& k, double t);

/// Same, reusing a precomputed inscribed ball of K as the duality centre.
ConvexBody inner_parallel(const ConvexBody& k, double t, const BallResult& ball);

/// Intersection of {<x,u> <= 1} over the facet normals u of K.
ConvexBody form_body(const ConvexBody& k);

/// Every facet touches the inscribed ball (within tol * scale).
bool is_tangential(const ConvexBody& k, double tol = kTangentTol);

/// Smallest t with K(t) tangential, to within `tol`; nullopt if the flow
/// never reaches a tangential body before collapsing.
std::optional<double> t_star(const ConvexBody& k, double tol = 1e-9);

/// Facet halfspaces tangent to every largest inscribed ball.
EnvelopeResult envelope(const ConvexBody& k);

/// (1 - s) K + s F.
ConvexBody blend(const ConvexBody& k, const ConvexBody& f, double s);

/// Polytopal unit-ball proxy circumscribing the unit ball: a regular
/// `facets`-gon in 2D, a subdivided icosahedron with at least `facets`
/// triangles in 3D.
ConvexBody ball_polytope(int dim, int facets);

ComparisonBodies comparison_bodies(const ConvexBody& k0, double t0, double t, int ball_facets);

std::vector<FlowSample> flow_trace(const ConvexBody& k, std::span<const double> t_grid);

/// Largest sampled time used by traces: r - max(1e-6, 1e-3 r).
double trace_t_max(double inradius);

/// Uniform grid of `count` times on [0, t_end].
std::vector<double> uniform_grid(double t_end, int count);

}  // namespace abrade

#endif  // ABRADE_FLOW_HPP
