#include "kernel.hpp"

#include "hull.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace abrade {

void require_same_dim(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) {
    throw GeometryError(ErrorCode::DimensionMismatch, "bodies have different dimensions");
  }
}

SupportResult support(const ConvexBody& body, const Vec3& u) {
  SupportResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const auto& v : body.vertices()) {
    const double h = v.dot(u);
    if (h > best.value) {
      best.value = h;
      best.witness = v;
    }
  }
  return best;
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  require_same_dim(a, b);
  if (a.degenerate() && a.vertices().size() == 1) return translated(b, a.vertex(0));
  if (b.degenerate() && b.vertices().size() == 1) return translated(a, b.vertex(0));
  std::vector<Vec3> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) sums.push_back(p + q);
  return convex_hull(a.dim(), sums);
}

ConvexBody scaled(const ConvexBody& body, double lambda) {
  if (lambda < 0.0) throw GeometryError(ErrorCode::InvalidArgument, "scale factor must be nonnegative");
  if (lambda == 0.0) return ConvexBody::singleton(body.dim(), Vec3::Zero());
  std::vector<Vec3> verts(body.vertices().begin(), body.vertices().end());
  for (auto& v : verts) v *= lambda;
  std::vector<Facet> facets(body.facets().begin(), body.facets().end());
  for (auto& f : facets) f.plane.offset *= lambda;
  if (body.degenerate()) return ConvexBody::singleton(body.dim(), verts.front());
  return ConvexBody(body.dim(), std::move(verts), std::move(facets),
                    std::vector<Edge>(body.edges().begin(), body.edges().end()));
}

ConvexBody translated(const ConvexBody& body, const Vec3& v) {
  Vec3 shift = v;
  if (body.dim() == 2) shift.z() = 0.0;
  std::vector<Vec3> verts(body.vertices().begin(), body.vertices().end());
  for (auto& p : verts) p += shift;
  if (body.degenerate()) return ConvexBody::singleton(body.dim(), verts.front());
  std::vector<Facet> facets(body.facets().begin(), body.facets().end());
  for (auto& f : facets) f.plane.offset += f.plane.normal.dot(shift);
  return ConvexBody(body.dim(), std::move(verts), std::move(facets),
                    std::vector<Edge>(body.edges().begin(), body.edges().end()));
}

std::optional<Homothety> homothety_check(const ConvexBody& a, const ConvexBody& b, double tol) {
  require_same_dim(a, b);
  const auto fa = a.facets();
  const auto fb = b.facets();
  if (fa.size() != fb.size() || a.vertices().size() != b.vertices().size() || fa.empty()) {
    return std::nullopt;
  }
  std::vector<int> match(fa.size(), -1);
  std::vector<bool> used(fb.size(), false);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (!used[j] && (fa[i].plane.normal - fb[j].plane.normal).norm() <= tol) {
        match[i] = int(j);
        used[j] = true;
        break;
      }
    }
    if (match[i] < 0) return std::nullopt;
  }

  const int d = a.dim();
  Eigen::MatrixXd m(long(fa.size()), d + 1);
  Eigen::VectorXd rhs(long(fa.size()));
  for (std::size_t i = 0; i < fa.size(); ++i) {
    m(long(i), 0) = fa[i].plane.offset;
    for (int k = 0; k < d; ++k) m(long(i), k + 1) = fa[i].plane.normal[k];
    rhs(long(i)) = fb[match[i]].plane.offset;
  }
  const Eigen::VectorXd x = m.colPivHouseholderQr().solve(rhs);
  Homothety h;
  h.ratio = x(0);
  for (int k = 0; k < d; ++k) h.translation[k] = x(k + 1);
  if (!(h.ratio > 0.0)) return std::nullopt;

  const double slack = tol * b.scale();
  if ((m * x - rhs).cwiseAbs().maxCoeff() > slack) return std::nullopt;
  for (const auto& v : a.vertices()) {
    const Vec3 image = h.ratio * v + h.translation;
    const bool hit = std::any_of(b.vertices().begin(), b.vertices().end(),
                                 [&](const Vec3& w) { return (w - image).norm() <= slack; });
    if (!hit) return std::nullopt;
  }
  return h;
}

}  // namespace abrade
