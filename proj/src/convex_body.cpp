#include "convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace abrade {

ConvexBody::ConvexBody(int dim, std::vector<Vec3> vertices,
                       std::vector<Facet> facets, std::vector<Edge> edges)
    : dim_(dim),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)),
      edges_(std::move(edges)) {
  if (dim_ != 2 && dim_ != 3) {
    throw GeometryError(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
  }
}

ConvexBody ConvexBody::singleton(int dim, const Vec3& point) {
  ConvexBody body(dim, {point}, {}, {});
  body.degenerate_ = true;
  if (dim == 2) body.vertices_[0].z() = 0.0;
  return body;
}

std::vector<HalfSpace> ConvexBody::halfspaces() const {
  std::vector<HalfSpace> hs;
  hs.reserve(facets_.size());
  for (const auto& f : facets_) hs.push_back(f.plane);
  return hs;
}

double ConvexBody::scale() const {
  double s = 1.0;
  for (const auto& v : vertices_) s = std::max(s, v.cwiseAbs().maxCoeff());
  return s;
}

Vec3 ConvexBody::vertex_centroid() const {
  Vec3 c = Vec3::Zero();
  for (const auto& v : vertices_) c += v;
  return vertices_.empty() ? c : Vec3(c / double(vertices_.size()));
}

std::string validate(const ConvexBody& body, double tol) {
  std::ostringstream err;
  const double t = tol * body.scale();
  const auto verts = body.vertices();
  for (std::size_t f = 0; f < body.facets().size(); ++f) {
    const auto& facet = body.facet(f);
    if (std::abs(facet.plane.normal.norm() - 1.0) > 1e-12) {
      err << "facet " << f << " normal is not unit";
      return err.str();
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (facet.plane.slack(verts[i]) < -t) {
        err << "vertex " << i << " violates facet " << f << " by "
            << -facet.plane.slack(verts[i]);
        return err.str();
      }
    }
    for (int i : facet.vertices) {
      if (std::abs(facet.plane.slack(verts[i])) > t) {
        err << "vertex " << i << " is off the plane of facet " << f;
        return err.str();
      }
    }
  }
  if (body.degenerate()) return {};
  if (body.dim() == 2) {
    const std::size_t n = verts.size();
    if (n < 3 || body.facets().size() != n) return "2D ring is malformed";
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3 a = verts[(i + 1) % n] - verts[i];
      const Vec3 b = verts[(i + 2) % n] - verts[(i + 1) % n];
      if (a.x() * b.y() - a.y() * b.x() <= 0.0) {
        err << "ring is not strictly CCW at vertex " << (i + 1) % n;
        return err.str();
      }
    }
  } else {
    const long euler = long(verts.size()) - long(body.edges().size()) +
                       long(body.facets().size());
    if (euler != 2) {
      err << "Euler characteristic is " << euler;
      return err.str();
    }
  }
  return {};
}

}  // namespace abrade
