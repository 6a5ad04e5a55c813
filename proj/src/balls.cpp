#include "balls.hpp"

#include "lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>

namespace abrade {

namespace {

constexpr double kTightTol = 1e-9;
constexpr double kUniqueTol = 1e-9;

struct Sphere {
  Vec3 center = Vec3::Zero();
  double radius = -1.0;  // empty
};

// Smallest sphere with every support point on its boundary; falls back to
// subsets when the support points are affinely dependent.
Sphere circumsphere(std::span<const Vec3> s) {
  if (s.empty()) return {};
  if (s.size() == 1) return {s[0], 0.0};
  const long k = long(s.size()) - 1;
  Eigen::MatrixXd w(3, k);
  for (long j = 0; j < k; ++j) w.col(j) = s[j + 1] - s[0];
  const Eigen::MatrixXd gram = w.transpose() * w;
  Eigen::VectorXd rhs(k);
  for (long j = 0; j < k; ++j) rhs(j) = 0.5 * gram(j, j);
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (lu.rank() == k) {
    const Eigen::VectorXd lambda = lu.solve(rhs);
    const Vec3 c = s[0] + w * lambda;
    return {c, (s[0] - c).norm()};
  }
  // Dependent support: the enclosing sphere of a proper subset suffices.
  Sphere best;
  best.radius = std::numeric_limits<double>::infinity();
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::vector<Vec3> sub;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) sub.push_back(s[i]);
    const Sphere cand = circumsphere(sub);
    if ((s[drop] - cand.center).norm() <= cand.radius * (1 + 1e-12) + 1e-15 &&
        cand.radius < best.radius) {
      best = cand;
    }
  }
  return best;
}

struct Welzl {
  std::span<const Vec3> pts;
  int dim;
  double slack;
  std::vector<Vec3> support;

  bool contains(const Sphere& s, const Vec3& p) const {
    return s.radius >= 0.0 && (p - s.center).norm() <= s.radius + slack;
  }

  Sphere run(std::size_t end) {
    Sphere ball = circumsphere(support);
    if (int(support.size()) == dim + 1) return ball;
    for (std::size_t i = 0; i < end; ++i) {
      if (contains(ball, pts[i])) continue;
      support.push_back(pts[i]);
      ball = run(i);
      support.pop_back();
    }
    return ball;
  }
};

std::uint64_t hash_points(std::span<const Vec3> pts) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& p : pts) {
    for (int k = 0; k < 3; ++k) {
      std::uint64_t bits;
      const double x = p[k];
      std::memcpy(&bits, &x, sizeof bits);
      h = (h ^ bits) * 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

BallResult inscribed_ball(int dim, std::span<const HalfSpace> hs, const Vec3& feasible) {
  const long m = long(hs.size());
  Eigen::MatrixXd a(m, dim + 1);
  Eigen::VectorXd b(m);
  for (long i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = hs[i].normal[j];
    a(i, dim) = 1.0;
    b(i) = hs[i].offset;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim + 1);
  c(dim) = 1.0;
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(dim + 1);
  for (int j = 0; j < dim; ++j) x0(j) = feasible[j];
  const auto res = lp::maximize(a, b, c, x0);
  if (res.status != lp::Status::Optimal) {
    throw GeometryError(ErrorCode::Unbounded, "inscribed ball LP is unbounded");
  }
  BallResult ball;
  for (int j = 0; j < dim; ++j) ball.center[j] = res.x(j);
  ball.radius = std::numeric_limits<double>::infinity();
  for (const auto& h : hs) ball.radius = std::min(ball.radius, h.slack(ball.center));
  if (!(ball.radius > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateInput, "body has empty interior");
  }
  double scale = 1.0;
  for (const auto& h : hs) scale = std::max(scale, std::abs(h.offset));
  for (long i = 0; i < m; ++i) {
    if (hs[i].slack(ball.center) - ball.radius <= kTightTol * scale) ball.active.push_back(int(i));
  }
  const Vec3 extent = optimal_center_extent(dim, hs, ball);
  ball.unique_center = extent.maxCoeff() <= kUniqueTol;
  return ball;
}

Vec3 optimal_center_extent(int dim, std::span<const HalfSpace> hs, const BallResult& ball) {
  const long m = long(hs.size());
  Eigen::MatrixXd a(m, dim);
  Eigen::VectorXd b(m);
  for (long i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = hs[i].normal[j];
    b(i) = hs[i].offset - ball.radius;
  }
  Eigen::VectorXd x0(dim);
  for (int j = 0; j < dim; ++j) x0(j) = ball.center[j];
  Vec3 extent = Vec3::Zero();
  for (int j = 0; j < dim; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(j) = 1.0;
    const auto hi = lp::maximize(a, b, e, x0);
    const auto lo = lp::maximize(a, b, -e, x0);
    if (hi.status != lp::Status::Optimal || lo.status != lp::Status::Optimal) {
      extent[j] = std::numeric_limits<double>::infinity();
    } else {
      extent[j] = hi.value + lo.value;
    }
  }
  return extent;
}

BallResult inscribed_ball(const ConvexBody& body) {
  if (body.degenerate()) throw GeometryError(ErrorCode::DegenerateInput, "body has empty interior");
  const auto hs = body.halfspaces();
  return inscribed_ball(body.dim(), hs, body.vertex_centroid());
}

BallResult enclosing_ball(int dim, std::span<const Vec3> points) {
  if (points.empty()) throw GeometryError(ErrorCode::InvalidArgument, "no points");
  std::vector<Vec3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::mt19937_64 rng(hash_points(pts));
  std::shuffle(pts.begin(), pts.end(), rng);

  double scale = 1.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  Welzl w{pts, dim, 1e-13 * scale, {}};
  const Sphere s = w.run(pts.size());

  BallResult ball;
  ball.center = s.center;
  ball.radius = s.radius;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::abs((points[i] - s.center).norm() - s.radius) <= kTightTol * scale)
      ball.active.push_back(int(i));
  }
  return ball;
}

BallResult enclosing_ball(const ConvexBody& body) {
  return enclosing_ball(body.dim(), body.vertices());
}

double asphericity(const ConvexBody& body) {
  const double r = inscribed_ball(body).radius;
  if (!(r > 0.0)) throw GeometryError(ErrorCode::DegenerateInput, "inscribed radius is zero");
  return enclosing_ball(body).radius / r;
}

}  // namespace abrade
