#include "critical_points.hpp"

#include "balls.hpp"
#include "flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace abrade {

namespace {

constexpr double kBoundaryTol = 1e-9;
constexpr double kFootTol = 1e-9;
const Vec3 kNudge = make_point(1e-7, 2e-7);

void require_planar(const ConvexBody& body) {
  if (body.dim() != 2) throw GeometryError(ErrorCode::DimensionMismatch, "critical points are planar only");
  if (body.degenerate()) throw GeometryError(ErrorCode::DegenerateInput, "body has empty interior");
}

double min_slack(const ConvexBody& body, const Vec3& p) {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& f : body.facets()) s = std::min(s, f.plane.slack(p));
  return s;
}

// Returns false if some foot lies within kFootTol of an edge endpoint.
bool classify(const ConvexBody& body, const Vec3& ref, CriticalSet& out) {
  const auto v = body.vertices();
  const std::size_t n = v.size();
  out.maxima.clear();
  out.minima.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = v[i];
    const Vec3& b = v[(i + 1) % n];
    const Vec3 e = b - a;
    const double len = e.norm();
    const double along = (ref - a).dot(e) / len;  // foot position from a
    if (std::abs(along) <= kFootTol || std::abs(along - len) <= kFootTol) return false;
    if (along > 0.0 && along < len) {
      const Vec3 foot = a + (along / len) * e;
      out.minima.push_back({foot, (foot - ref).norm()});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& p = v[i];
    const Vec3 prev = p - v[(i + n - 1) % n];
    const Vec3 next = v[(i + 1) % n] - p;
    if ((p - ref).dot(prev) > 0.0 && (p - ref).dot(next) < 0.0) out.maxima.push_back({p, (p - ref).norm()});
  }
  out.count = int(out.maxima.size() + out.minima.size());
  return true;
}

}  // namespace

CriticalSet critical_points(const ConvexBody& body, const Vec3& ref) {
  require_planar(body);
  const double slack = min_slack(body, ref);
  if (slack <= -kBoundaryTol) throw GeometryError(ErrorCode::RefOutside, "reference point is outside the body");
  if (slack < kBoundaryTol) throw GeometryError(ErrorCode::RefOnBoundary, "reference point is on the boundary");
  CriticalSet out;
  Vec3 p = ref;
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (classify(body, p, out)) return out;
    out.degenerate = true;
    p += kNudge;
  }
  throw GeometryError(ErrorCode::Numerical, "could not resolve a degenerate reference point");
}

std::vector<CountSample> n_trace(const ConvexBody& k, const Vec3& ref, std::span<const double> t_grid) {
  require_planar(k);
  const auto ball = inscribed_ball(k);
  std::vector<CountSample> out;
  for (double t : t_grid) {
    const auto kt = inner_parallel(k, t, ball);
    if (min_slack(kt, ref) < kBoundaryTol) {
      throw GeometryError(ErrorCode::RefOutside, "reference point leaves the body at t = " + std::to_string(t));
    }
    const auto cs = critical_points(kt, ref);
    out.push_back({t, cs.count, cs.degenerate});
  }
  return out;
}

std::vector<CountSample> n_trace_centroid(const ConvexBody& k, std::span<const double> t_grid) {
  require_planar(k);
  const auto ball = inscribed_ball(k);
  std::vector<CountSample> out;
  for (double t : t_grid) {
    const auto kt = inner_parallel(k, t, ball);
    const auto cs = critical_points(kt, area_centroid(kt));
    out.push_back({t, cs.count, cs.degenerate});
  }
  return out;
}

Vec3 area_centroid(const ConvexBody& body) {
  require_planar(body);
  const auto v = body.vertices();
  const Vec3 o = v[0];
  double area = 0.0;
  Vec3 acc = Vec3::Zero();
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Vec3 a = v[i] - o, b = v[i + 1] - o;
    const double w = 0.5 * (a.x() * b.y() - a.y() * b.x());
    area += w;
    acc += w * (a + b) / 3.0;
  }
  return o + acc / area;
}

}  // namespace abrade
