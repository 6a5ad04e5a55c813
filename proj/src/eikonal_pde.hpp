#ifndef ABRADE_EIKONAL_PDE_HPP
#define ABRADE_EIKONAL_PDE_HPP

#include "convex_body.hpp"

#include <functional>
#include <vector>

namespace abrade {

/// Radii r_k on the uniform angular grid phi_k = 2 pi k / n about the origin.
struct PolarCurve {
  std::vector<double> r;

  int n() const { return int(r.size()); }
  double dphi() const;
  double phi(int k) const;
  Vec3 point(int k) const;
};

struct PolarMeasures {
  double area = 0.0;
  double perimeter = 0.0;
  double iq = 0.0;  // area / perimeter^2
};

struct PdeSample {
  double t = 0.0;
  PolarCurve curve;
};

struct CompareReport {
  double sup_error = 0.0;
  double iq_error = 0.0;
};

inline constexpr int kMinGrid = 16;
inline constexpr double kCflFactor = 0.4;

PolarCurve circle_curve(int n, double radius);

/// Radial function of a 2D body about `origin`, which must be interior.
PolarCurve sample_body(const ConvexBody& body, int n, const Vec3& origin = Vec3::Zero());

/// Largest admissible explicit step: 0.4 dphi min r / (1 + max|r_phi| / min r).
double cfl_limit(const PolarCurve& c);

/// One explicit Euler step of r_t = -sqrt(r^2 + r_phi^2) / r with Godunov
/// upwinding. Throws BadRange if dt exceeds the CFL limit and Collapse if a
/// radius reaches zero.
PolarCurve pde_step(const PolarCurve& c, double dt);

/// Integrates to exactly T, shrinking dt to the CFL limit where needed.
/// The observer sees every state including t = 0. Throws Collapse as soon
/// as the remaining time reaches the smallest radius.
void pde_run(const PolarCurve& c0, double T, double dt,
             const std::function<void(double, const PolarCurve&)>& observer);
std::vector<PdeSample> pde_run(const PolarCurve& c0, double T, double dt);

PolarMeasures polar_measures(const PolarCurve& c);

/// The sample polygon turns left at every vertex (within tol).
bool is_convex(const PolarCurve& c, double tol = 1e-12);

/// Polygon bounded by the tangent lines of the sampled curve at `n_body`
/// equally spaced angles. The curve is linearly resampled when n_body != n.
ConvexBody polygonize(const PolarCurve& c, int n_body);

/// Integrates the PDE to T and compares against the exact inner parallel
/// body of the polygonized initial curve, sampled radially on the PDE grid.
CompareReport compare_exact(const PolarCurve& c0, double T, int n_body, double dt);

}  // namespace abrade

#endif  // ABRADE_EIKONAL_PDE_HPP
