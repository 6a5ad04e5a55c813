#include "eikonal_pde.hpp"

#include "balls.hpp"
#include "flow.hpp"
#include "hull.hpp"
#include "measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace abrade {

namespace {

void check_grid(const PolarCurve& c) {
  if (c.n() < kMinGrid) throw GeometryError(ErrorCode::InvalidArgument, "angular grid needs n >= 16");
  for (double r : c.r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw GeometryError(ErrorCode::InvalidArgument, "radii must be positive and finite");
    }
  }
}

int wrap(int k, int n) { return ((k % n) + n) % n; }

// Radius of a body along direction phi from an interior point.
double ray_radius(const ConvexBody& body, const Vec3& origin, double phi) {
  const Vec3 d(std::cos(phi), std::sin(phi), 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : body.facets()) {
    const double den = f.plane.normal.dot(d);
    if (den > 0.0) best = std::min(best, f.plane.slack(origin) / den);
  }
  return best;
}

PolarCurve resample(const PolarCurve& c, int n) {
  if (n == c.n()) return c;
  PolarCurve out;
  out.r.resize(n);
  for (int k = 0; k < n; ++k) {
    const double pos = double(k) * c.n() / n;
    const int i = int(std::floor(pos));
    const double w = pos - i;
    out.r[k] = (1.0 - w) * c.r[wrap(i, c.n())] + w * c.r[wrap(i + 1, c.n())];
  }
  return out;
}

}  // namespace

double PolarCurve::dphi() const { return 2.0 * std::numbers::pi / n(); }

double PolarCurve::phi(int k) const { return dphi() * k; }

Vec3 PolarCurve::point(int k) const {
  const double a = phi(k);
  return make_point(r[k] * std::cos(a), r[k] * std::sin(a));
}

PolarCurve circle_curve(int n, double radius) {
  PolarCurve c;
  c.r.assign(n, radius);
  check_grid(c);
  return c;
}

PolarCurve sample_body(const ConvexBody& body, int n, const Vec3& origin) {
  if (body.dim() != 2) throw GeometryError(ErrorCode::DimensionMismatch, "polar sampling is planar");
  for (const auto& f : body.facets()) {
    if (!(f.plane.slack(origin) > 0.0)) {
      throw GeometryError(ErrorCode::InvalidArgument, "origin is not interior to the body");
    }
  }
  PolarCurve c;
  c.r.resize(n);
  for (int k = 0; k < n; ++k) c.r[k] = ray_radius(body, origin, 2.0 * std::numbers::pi * k / n);
  check_grid(c);
  return c;
}

double cfl_limit(const PolarCurve& c) {
  const int n = c.n();
  const double h = c.dphi();
  double rmin = std::numeric_limits<double>::infinity(), slope = 0.0;
  for (int k = 0; k < n; ++k) {
    rmin = std::min(rmin, c.r[k]);
    slope = std::max(slope, std::abs(c.r[wrap(k + 1, n)] - c.r[k]) / h);
  }
  return kCflFactor * h * rmin / (1.0 + slope / rmin);
}

PolarCurve pde_step(const PolarCurve& c, double dt) {
  check_grid(c);
  if (!(dt > 0.0)) throw GeometryError(ErrorCode::BadRange, "time step must be positive");
  if (dt > cfl_limit(c) * (1.0 + 1e-12)) throw GeometryError(ErrorCode::BadRange, "time step exceeds the CFL limit");
  const int n = c.n();
  const double h = c.dphi();
  PolarCurve out;
  out.r.resize(n);
  for (int k = 0; k < n; ++k) {
    const double r = c.r[k];
    const double back = (r - c.r[wrap(k - 1, n)]) / h;
    const double fwd = (c.r[wrap(k + 1, n)] - r) / h;
    const double lo = std::max(back, 0.0), hi = std::min(fwd, 0.0);
    const double grad2 = std::max(lo * lo, hi * hi);
    out.r[k] = r - dt * std::sqrt(r * r + grad2) / r;
  }
  double rmax = 0.0;
  for (double r : c.r) rmax = std::max(rmax, r);
  for (double r : out.r) {
    if (!(r > 1e-9 * rmax)) throw GeometryError(ErrorCode::Collapse, "curve collapsed");
  }
  return out;
}

void pde_run(const PolarCurve& c0, double T, double dt,
             const std::function<void(double, const PolarCurve&)>& observer) {
  check_grid(c0);
  if (!(T >= 0.0) || !(dt > 0.0)) throw GeometryError(ErrorCode::BadRange, "need T >= 0 and dt > 0");
  PolarCurve c = c0;
  double t = 0.0;
  if (observer) observer(t, c);
  while (t < T) {
    const double remaining = T - t;
    // Every step lowers the smallest radius by at least its length.
    if (remaining >= *std::min_element(c.r.begin(), c.r.end())) {
      throw GeometryError(ErrorCode::Collapse, "curve collapses before T");
    }
    const double step = std::min({dt, cfl_limit(c), remaining});
    c = pde_step(c, step);
    // land exactly on T rather than accumulating roundoff
    t = step == remaining ? T : t + step;
    if (observer) observer(t, c);
  }
}

std::vector<PdeSample> pde_run(const PolarCurve& c0, double T, double dt) {
  std::vector<PdeSample> out;
  pde_run(c0, T, dt, [&](double t, const PolarCurve& c) { out.push_back({t, c}); });
  return out;
}

PolarMeasures polar_measures(const PolarCurve& c) {
  const int n = c.n();
  PolarMeasures m;
  const double s = std::sin(c.dphi());
  for (int k = 0; k < n; ++k) {
    const int j = wrap(k + 1, n);
    m.area += 0.5 * c.r[k] * c.r[j] * s;
    m.perimeter += (c.point(j) - c.point(k)).norm();
  }
  m.iq = m.area / (m.perimeter * m.perimeter);
  return m;
}

bool is_convex(const PolarCurve& c, double tol) {
  const int n = c.n();
  for (int k = 0; k < n; ++k) {
    const Vec3 a = c.point(wrap(k - 1, n)), b = c.point(k), d = c.point(wrap(k + 1, n));
    const Vec3 e0 = b - a, e1 = d - b;
    if (e0.x() * e1.y() - e0.y() * e1.x() < -tol * e0.norm() * e1.norm()) return false;
  }
  return true;
}

ConvexBody polygonize(const PolarCurve& c, int n_body) {
  check_grid(c);
  const PolarCurve s = resample(c, n_body);
  const int n = s.n();
  std::vector<HalfSpace> hs;
  hs.reserve(n);
  for (int k = 0; k < n; ++k) {
    const Vec3 chord = s.point(wrap(k + 1, n)) - s.point(wrap(k - 1, n));
    const Vec3 normal = make_point(chord.y(), -chord.x()).normalized();
    hs.push_back({normal, normal.dot(s.point(k))});
  }
  return halfspace_intersection(2, hs, Vec3::Zero());
}

CompareReport compare_exact(const PolarCurve& c0, double T, int n_body, double dt) {
  if (!is_convex(c0, 1e-9)) throw GeometryError(ErrorCode::InvalidArgument, "initial curve is not convex");
  const ConvexBody body = polygonize(c0, n_body);
  const ConvexBody exact = inner_parallel(body, T);
  for (const auto& f : exact.facets()) {
    if (!(f.plane.slack(Vec3::Zero()) > 0.0)) {
      throw GeometryError(ErrorCode::RefOutside, "origin leaves the exact body before T");
    }
  }
  PolarCurve pde = c0;
  pde_run(c0, T, dt, [&](double, const PolarCurve& c) { pde = c; });

  CompareReport rep;
  for (int k = 0; k < pde.n(); ++k) {
    rep.sup_error = std::max(rep.sup_error, std::abs(pde.r[k] - ray_radius(exact, Vec3::Zero(), pde.phi(k))));
  }
  rep.iq_error = std::abs(polar_measures(pde).iq - iq(exact));
  return rep;
}

}  // namespace abrade
