#ifndef ABRADE_CONVEX_BODY_HPP
#define ABRADE_CONVEX_BODY_HPP

#include "types.hpp"

#include <array>
#include <span>
#include <vector>

namespace abrade {

struct Facet {
  HalfSpace plane;
  /// Incident vertices. 2D: the edge endpoints in CCW order. 3D: the facet
  /// polygon, counter-clockwise seen from outside.
  std::vector<int> vertices;
  /// Index of the generating halfspace when the body came out of a
  /// halfspace intersection, -1 otherwise.
  int source = -1;
};

struct Edge {
  std::array<int, 2> vertices{};
  std::array<int, 2> facets{};
};

/// A convex polygon (dim 2) or polytope (dim 3). Immutable once built.
///
/// 2D bodies store a strictly CCW vertex ring; facet i joins vertex i and
/// vertex i+1. 3D bodies store the full vertex/facet/edge complex.
/// A degenerate body (a single point, used as a Minkowski summand) carries
/// vertices only.
class ConvexBody {
 public:
  ConvexBody() = default;
  ConvexBody(int dim, std::vector<Vec3> vertices, std::vector<Facet> facets,
             std::vector<Edge> edges);

  static ConvexBody singleton(int dim, const Vec3& point);

  int dim() const { return dim_; }
  bool degenerate() const { return degenerate_; }

  std::span<const Vec3> vertices() const { return vertices_; }
  std::span<const Facet> facets() const { return facets_; }
  std::span<const Edge> edges() const { return edges_; }

  const Vec3& vertex(std::size_t i) const { return vertices_[i]; }
  const Facet& facet(std::size_t i) const { return facets_[i]; }

  std::vector<HalfSpace> halfspaces() const;

  /// Largest absolute coordinate, at least 1. Used to scale tolerances.
  double scale() const;

  Vec3 vertex_centroid() const;

 private:
  int dim_ = 0;
  bool degenerate_ = false;
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Edge> edges_;
};

/// Checks the representation invariants; returns an empty string when the
/// body is valid, otherwise a description of the first violation.
std::string validate(const ConvexBody& body, double tol = 1e-9);

}  // namespace abrade

#endif  // ABRADE_CONVEX_BODY_HPP
