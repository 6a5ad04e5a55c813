#ifndef ABRADE_MEASURES_HPP
#define ABRADE_MEASURES_HPP

#include "convex_body.hpp"

#include <optional>
#include <vector>

namespace abrade {

/// V_j = V(K,...,K,F,...,F) with j copies of F, j = 0..d.
struct MixedVolumeRow {
  std::vector<double> v;
};

/// Quermassintegrals, normalized so V(K + sB) = sum_j binom(d,j) W_j s^j.
struct SteinerRow {
  std::vector<double> w;
};

struct Axes {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> c;  // 3D only
};

double volume(const ConvexBody& body);
double surface_area(const ConvexBody& body);

/// V / A^(d/(d-1)).
double iq(const ConvexBody& body);

SteinerRow steiner(const ConvexBody& body);

/// Fits V(K + sF) at s = samples (default 0..d) and rescales by binomials.
MixedVolumeRow mixed_volumes(const ConvexBody& k, const ConvexBody& f);
MixedVolumeRow mixed_volumes(const ConvexBody& k, const ConvexBody& f,
                             const std::vector<double>& samples);

/// V_1^2 - V_0 V_2 against the form body. Nonnegative up to roundoff and
/// zero exactly for tangential bodies.
double minkowski_residual(const ConvexBody& k);

/// V(L(t)) / A(M(t))^(d/(d-1)).
double lower_bound_iq(const ConvexBody& k0, double t0, double t, int ball_facets);

/// Left derivative of the lower bound at t = t0.
double lower_bound_derivative(const ConvexBody& k0);

Axes axes(const ConvexBody& body);

/// V(K) / V_1(K; C)^(d/(d-1)).
double normed_iq(const ConvexBody& k, const ConvexBody& c);

/// Support-function width h(u) + h(-u).
double width(const ConvexBody& body, const Vec3& u);

}  // namespace abrade

#endif  // ABRADE_MEASURES_HPP
