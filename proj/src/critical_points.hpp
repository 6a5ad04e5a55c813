#ifndef ABRADE_CRITICAL_POINTS_HPP
#define ABRADE_CRITICAL_POINTS_HPP

#include "convex_body.hpp"

#include <span>
#include <vector>

namespace abrade {

struct CriticalPoint {
  Vec3 point;
  double distance = 0.0;
};

struct CriticalSet {
  std::vector<CriticalPoint> maxima;  // vertices
  std::vector<CriticalPoint> minima;  // feet of perpendiculars inside edges
  int count = 0;
  /// A foot landed on an edge endpoint; the reference was nudged by
  /// (1e-7, 2e-7) before counting.
  bool degenerate = false;
};

struct CountSample {
  double t = 0.0;
  int count = 0;
  bool degenerate = false;
};

/// Local extrema of the distance from `ref` along the boundary of a polygon.
/// Throws RefOnBoundary if ref is within 1e-9 of a facet line, RefOutside
/// if it lies outside.
CriticalSet critical_points(const ConvexBody& body, const Vec3& ref);

/// Critical point counts of K(t) for a fixed reference. Throws RefOutside if
/// the reference is not interior to some K(t).
std::vector<CountSample> n_trace(const ConvexBody& k, const Vec3& ref, std::span<const double> t_grid);

/// Same with the reference moved to the area centroid of every K(t).
std::vector<CountSample> n_trace_centroid(const ConvexBody& k, std::span<const double> t_grid);

Vec3 area_centroid(const ConvexBody& body);

}  // namespace abrade

#endif  // ABRADE_CRITICAL_POINTS_HPP
