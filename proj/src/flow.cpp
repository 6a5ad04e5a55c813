#include "flow.hpp"

#include "hull.hpp"
#include "kernel.hpp"
#include "lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

namespace abrade {

ConvexBody inner_parallel(const ConvexBody& k, double t, const BallResult& ball) {
  if (t < 0.0) throw GeometryError(ErrorCode::BadRange, "negative time");
  if (t >= ball.radius * (1.0 - 1e-12)) {
    throw GeometryError(ErrorCode::EmptyBody, "t >= r(K): the inner parallel body has no interior");
  }
  auto hs = k.halfspaces();
  for (auto& h : hs) h.offset -= t;
  return halfspace_intersection(k.dim(), hs, ball.center);
}

ConvexBody inner_parallel(const ConvexBody& k, double t) {
  return inner_parallel(k, t, inscribed_ball(k));
}

ConvexBody form_body(const ConvexBody& k) {
  auto hs = k.halfspaces();
  for (auto& h : hs) h.offset = 1.0;
  try {
    return halfspace_intersection(k.dim(), hs, Vec3::Zero());
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::Unbounded) {
      throw GeometryError(ErrorCode::Numerical, "facet normals of a bounded body fail to span");
    }
    throw;
  }
}

namespace {

std::vector<double> tangency_gaps(const ConvexBody& k, const BallResult& ball) {
  std::vector<double> gaps;
  gaps.reserve(k.facets().size());
  for (const auto& f : k.facets()) gaps.push_back(f.plane.slack(ball.center) - ball.radius);
  return gaps;
}

}  // namespace

bool is_tangential(const ConvexBody& k, double tol) {
  const auto ball = inscribed_ball(k);
  const double lim = tol * k.scale();
  for (double g : tangency_gaps(k, ball))
    if (g > lim) return false;
  return true;
}

std::optional<double> t_star(const ConvexBody& k, double tol) {
  const auto ball = inscribed_ball(k);
  if (!ball.unique_center) return std::nullopt;
  const auto gaps = tangency_gaps(k, ball);
  const double lim = kTangentTol * k.scale();
  if (std::all_of(gaps.begin(), gaps.end(), [&](double g) { return g <= lim; })) return 0.0;

  // The optimal centre is shared by every K(t) and each surviving facet keeps
  // its gap, so tangency at t means every non-tangent facet has dropped out.
  // Facets only ever drop out, hence the predicate is monotone in t.
  auto tangential_at = [&](double t) {
    const auto kt = inner_parallel(k, t, ball);
    return std::all_of(kt.facets().begin(), kt.facets().end(),
                       [&](const Facet& f) { return gaps[f.source] <= lim; });
  };
  double lo = 0.0;
  double hi = ball.radius * (1.0 - 1e-9);
  if (!tangential_at(hi)) return std::nullopt;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (tangential_at(mid) ? hi : lo) = mid;
  }
  return hi;
}

EnvelopeResult envelope(const ConvexBody& k) {
  const auto ball = inscribed_ball(k);
  const int dim = k.dim();
  const auto hs = k.halfspaces();
  const long m = long(hs.size());

  // Optimal-centre polytope {c : <a_i, c> <= b_i - r}.
  Eigen::MatrixXd a(m, dim);
  Eigen::VectorXd b(m);
  for (long i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = hs[i].normal[j];
    b(i) = hs[i].offset - ball.radius;
  }
  Eigen::VectorXd x0(dim);
  for (int j = 0; j < dim; ++j) x0(j) = ball.center[j];

  EnvelopeResult out;
  for (long i = 0; i < m; ++i) {
    const auto res = lp::maximize(a, b, -a.row(i).transpose(), x0);
    // widest gap of facet i over all optimal centres
    const double widest = hs[i].offset + res.value;
    if (res.status == lp::Status::Optimal && widest - ball.radius <= 1e-8) {
      out.halfspaces.push_back(hs[i]);
    }
  }

  const long n = long(out.halfspaces.size());
  Eigen::MatrixXd ea(n, dim);
  Eigen::VectorXd eb(n);
  for (long i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) ea(i, j) = out.halfspaces[i].normal[j];
    eb(i) = out.halfspaces[i].offset;
  }
  std::vector<Eigen::VectorXd> dirs;
  for (int j = 0; j < dim; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(j) = 1.0;
    dirs.push_back(e);
    dirs.push_back(-e);
  }
  std::mt19937_64 rng(0x5eedu);
  std::normal_distribution<double> gauss;
  for (int k2 = 0; k2 < 2 * dim; ++k2) {
    Eigen::VectorXd d(dim);
    for (int j = 0; j < dim; ++j) d(j) = gauss(rng);
    dirs.push_back(d.normalized());
  }
  out.bounded = n > dim;
  for (const auto& d : dirs) {
    if (!out.bounded) break;
    out.bounded = lp::maximize(ea, eb, d, x0).status == lp::Status::Optimal;
  }
  if (out.bounded) out.body = halfspace_intersection(dim, out.halfspaces, ball.center);
  return out;
}

ConvexBody blend(const ConvexBody& k, const ConvexBody& f, double s) {
  require_same_dim(k, f);
  if (s < 0.0 || s > 1.0) throw GeometryError(ErrorCode::BadRange, "blend parameter outside [0,1]");
  if (s == 0.0) return k;
  if (s == 1.0) return f;
  return minkowski_sum(scaled(k, 1.0 - s), scaled(f, s));
}

namespace {

ConvexBody geodesic_ball(int min_facets) {
  const double phi = std::numbers::phi;
  std::vector<Vec3> v = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
  };
  for (auto& p : v) p.normalize();
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1},
  };
  while (int(tris.size()) < min_facets) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      v.push_back((v[a] + v[b]).normalized());
      return mid[key] = int(v.size()) - 1;
    };
    std::vector<std::array<int, 3>> next;
    for (const auto& t : tris) {
      const int ab = midpoint(t[0], t[1]), bc = midpoint(t[1], t[2]), ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  const ConvexBody hull = hull3(v);
  double inner = std::numeric_limits<double>::infinity();
  for (const auto& f : hull.facets()) inner = std::min(inner, f.plane.offset);
  return scaled(hull, 1.0 / inner);
}

}  // namespace

ConvexBody ball_polytope(int dim, int facets) {
  if (dim == 2) {
    if (facets < 3) throw GeometryError(ErrorCode::InvalidArgument, "ball polygon needs >= 3 sides");
    std::vector<HalfSpace> hs(facets);
    for (int k = 0; k < facets; ++k) {
      const double a = 2.0 * std::numbers::pi * k / facets;
      hs[k] = {make_point(std::cos(a), std::sin(a)), 1.0};
    }
    return halfspace_intersection(2, hs, Vec3::Zero());
  }
  if (dim == 3) return geodesic_ball(facets);
  throw GeometryError(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
}

ComparisonBodies comparison_bodies(const ConvexBody& k0, double t0, double t, int ball_facets) {
  if (t < 0.0 || t > t0) throw GeometryError(ErrorCode::BadRange, "need 0 <= t <= t0");
  const int min_facets = k0.dim() == 2 ? 32 : 80;
  if (ball_facets < min_facets) {
    throw GeometryError(ErrorCode::InvalidArgument, "ball approximation is too coarse");
  }
  if (t == t0) return {k0, k0};
  const double s = t0 - t;
  return {minkowski_sum(k0, scaled(ball_polytope(k0.dim(), ball_facets), s)),
          minkowski_sum(k0, scaled(form_body(k0), s))};
}

std::vector<FlowSample> flow_trace(const ConvexBody& k, std::span<const double> t_grid) {
  const auto ball = inscribed_ball(k);
  std::vector<FlowSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    FlowSample s{t, inner_parallel(k, t, ball), {}};
    for (const auto& f : s.body.facets()) s.surviving_normals.push_back(f.source);
    std::sort(s.surviving_normals.begin(), s.surviving_normals.end());
    out.push_back(std::move(s));
  }
  return out;
}

double trace_t_max(double inradius) { return inradius - std::max(1e-6, 1e-3 * inradius); }

std::vector<double> uniform_grid(double t_end, int count) {
  if (count < 2) return {0.0};
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = t_end * i / (count - 1);
  return g;
}

}  // namespace abrade
