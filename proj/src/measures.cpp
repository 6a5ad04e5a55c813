#include "measures.hpp"

#include "flow.hpp"
#include "kernel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace abrade {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double facet_area(const ConvexBody& body, const Facet& f) {
  Vec3 acc = Vec3::Zero();
  const auto& idx = f.vertices;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    acc += body.vertex(idx[i]).cross(body.vertex(idx[(i + 1) % idx.size()]));
  }
  return 0.5 * std::abs(acc.dot(f.plane.normal));
}

double exponent(int dim) { return double(dim) / (dim - 1); }

void require_solid(const ConvexBody& body) {
  if (body.degenerate()) throw GeometryError(ErrorCode::DegenerateInput, "body has empty interior");
}

}  // namespace

double volume(const ConvexBody& body) {
  if (body.degenerate()) return 0.0;
  const auto v = body.vertices();
  if (body.dim() == 2) {
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec3& p = v[i];
      const Vec3& q = v[(i + 1) % v.size()];
      a += p.x() * q.y() - p.y() * q.x();
    }
    return 0.5 * a;
  }
  const Vec3 c = body.vertex_centroid();
  double vol = 0.0;
  for (const auto& f : body.facets()) vol += facet_area(body, f) * f.plane.slack(c) / 3.0;
  return vol;
}

double surface_area(const ConvexBody& body) {
  if (body.degenerate()) return 0.0;
  const auto v = body.vertices();
  if (body.dim() == 2) {
    double len = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) len += (v[(i + 1) % v.size()] - v[i]).norm();
    return len;
  }
  double a = 0.0;
  for (const auto& f : body.facets()) a += facet_area(body, f);
  return a;
}

double iq(const ConvexBody& body) {
  require_solid(body);
  return volume(body) / std::pow(surface_area(body), exponent(body.dim()));
}

SteinerRow steiner(const ConvexBody& body) {
  require_solid(body);
  if (body.dim() == 2) return {{volume(body), surface_area(body) / 2.0, std::numbers::pi}};
  double edge_term = 0.0;
  for (const auto& e : body.edges()) {
    const Vec3& n0 = body.facet(e.facets[0]).plane.normal;
    const Vec3& n1 = body.facet(e.facets[1]).plane.normal;
    const double theta = std::atan2(n0.cross(n1).norm(), n0.dot(n1));
    edge_term += (body.vertex(e.vertices[0]) - body.vertex(e.vertices[1])).norm() * theta / 2.0;
  }
  return {{volume(body), surface_area(body) / 3.0, edge_term / 3.0, 4.0 * std::numbers::pi / 3.0}};
}

MixedVolumeRow mixed_volumes(const ConvexBody& k, const ConvexBody& f,
                             const std::vector<double>& samples) {
  require_same_dim(k, f);
  require_solid(k);
  require_solid(f);
  const int d = k.dim();
  if (int(samples.size()) != d + 1) {
    throw GeometryError(ErrorCode::InvalidArgument, "need d+1 sample points");
  }
  Eigen::MatrixXd vander(d + 1, d + 1);
  Eigen::VectorXd vols(d + 1);
  for (int i = 0; i <= d; ++i) {
    const double s = samples[i];
    if (s < 0.0) throw GeometryError(ErrorCode::BadRange, "negative sample point");
    for (int j = 0; j <= d; ++j) vander(i, j) = std::pow(s, j);
    vols(i) = s == 0.0 ? volume(k) : volume(minkowski_sum(k, scaled(f, s)));
  }
  const Eigen::VectorXd coef = vander.fullPivLu().solve(vols);
  MixedVolumeRow row;
  for (int j = 0; j <= d; ++j) row.v.push_back(coef(j) / binom(d, j));
  return row;
}

MixedVolumeRow mixed_volumes(const ConvexBody& k, const ConvexBody& f) {
  std::vector<double> s(k.dim() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = double(i);
  return mixed_volumes(k, f, s);
}

double minkowski_residual(const ConvexBody& k) {
  const auto row = mixed_volumes(k, form_body(k));
  return row.v[1] * row.v[1] - row.v[0] * row.v[2];
}

double lower_bound_iq(const ConvexBody& k0, double t0, double t, int ball_facets) {
  const auto cb = comparison_bodies(k0, t0, t, ball_facets);
  return volume(cb.inner) / std::pow(surface_area(cb.outer), exponent(k0.dim()));
}

double lower_bound_derivative(const ConvexBody& k0) {
  const int d = k0.dim();
  const double a = surface_area(k0);
  return -double(d * d) / std::pow(a, (2.0 * d - 1.0) / (d - 1.0)) * minkowski_residual(k0);
}

double width(const ConvexBody& body, const Vec3& u) {
  return support(body, u).value + support(body, -u).value;
}

Axes axes(const ConvexBody& body) {
  require_solid(body);
  const auto v = body.vertices();
  double best = -1.0;
  Vec3 dir_a = Vec3::UnitX();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double dd = (v[i] - v[j]).squaredNorm();
      if (dd > best) {
        best = dd;
        dir_a = v[j] - v[i];
      }
    }
  }
  Axes out;
  out.a = std::sqrt(best);
  dir_a.normalize();
  if (body.dim() == 2) {
    out.b = width(body, make_point(-dir_a.y(), dir_a.x()));
    return out;
  }

  // Orthonormal frame (e1, e2) of the plane orthogonal to a.
  const Vec3 seed = std::abs(dir_a.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 e1 = dir_a.cross(seed).normalized();
  const Vec3 e2 = dir_a.cross(e1);
  auto dir = [&](double phi) { return Vec3(std::cos(phi) * e1 + std::sin(phi) * e2); };
  auto w = [&](double phi) { return width(body, dir(phi)); };

  // Widths are pi-periodic in phi.
  constexpr int kSamples = 4096;
  const double step = std::numbers::pi / kSamples;
  double best_phi = 0.0, best_w = -1.0;
  for (int i = 0; i < kSamples; ++i) {
    const double wi = w(i * step);
    if (wi > best_w) {
      best_w = wi;
      best_phi = i * step;
    }
  }
  // Golden-section refinement on the bracketing cell.
  double lo = best_phi - step, hi = best_phi + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = w(x1), f2 = w(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = w(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = w(x2);
    }
  }
  const double phi = 0.5 * (lo + hi);
  if (w(phi) > best_w) {
    best_w = w(phi);
    best_phi = phi;
  }
  out.b = best_w;
  out.c = width(body, dir_a.cross(dir(best_phi)).normalized());
  return out;
}

double normed_iq(const ConvexBody& k, const ConvexBody& c) {
  const auto row = mixed_volumes(k, c);
  return row.v[0] / std::pow(row.v[1], exponent(k.dim()));
}

}  // namespace abrade
