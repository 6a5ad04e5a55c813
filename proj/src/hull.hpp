#ifndef ABRADE_HULL_HPP
#define ABRADE_HULL_HPP

#include "convex_body.hpp"

#include <span>
#include <vector>

namespace abrade {

/// Default coordinate merge tolerance, relative to the point-set scale.
inline constexpr double kMergeTol = 1e-9;

/// hull3 retries a failed facet merge this many times, each with a ten
/// times coarser tolerance.
inline constexpr int kMergeRetries = 3;

/// Planar convex hull. Points within `tol * scale` of a hull chord are not
/// kept as vertices. Throws DegenerateInput for fewer than three distinct or
/// collinear points.
ConvexBody hull2(std::span<const Vec3> points, double tol = kMergeTol);

/// Spatial convex hull (quickhull followed by coplanar facet merging).
/// Throws DegenerateInput for coplanar input and Numerical if no merge
/// tolerance up to tol * 10^kMergeRetries yields a closed facet complex.
ConvexBody hull3(std::span<const Vec3> points, double tol = kMergeTol);

ConvexBody convex_hull(int dim, std::span<const Vec3> points,
                       double tol = kMergeTol);

/// Intersection of halfspaces, computed by polar duality about
/// `interior_point`. Redundant halfspaces are dropped; surviving facets keep
/// the exact input planes and record their input index in Facet::source.
/// Throws EmptyOrLowerDim if the point is not strictly interior to every
/// halfspace and Unbounded if the normals do not positively span.
ConvexBody halfspace_intersection(int dim, std::span<const HalfSpace> halfspaces,
                                  const Vec3& interior_point);

namespace detail {

/// Vertex/facet/edge complex of a 3D hull, expressed in input indices.
struct HullComplex {
  struct Face {
    Vec3 normal;
    double offset = 0.0;
    std::vector<int> vertices;  // input indices, CCW from outside
  };
  std::vector<int> vertices;  // input indices of hull vertices
  std::vector<Face> faces;
  std::vector<Edge> edges;  // vertex entries are input indices
};

HullComplex hull3_complex(std::span<const Vec3> points, double tol,
                          double visibility_tol);

/// Input indices of the CCW hull ring.
std::vector<int> hull2_ring(std::span<const Vec3> points, double tol);

}  // namespace detail

}  // namespace abrade

#endif  // ABRADE_HULL_HPP
