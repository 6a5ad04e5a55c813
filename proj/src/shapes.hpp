#ifndef ABRADE_SHAPES_HPP
#define ABRADE_SHAPES_HPP

#include "convex_body.hpp"

#include <cstdint>
#include <string>

namespace abrade::shapes {

/// [0,w] x [0,h]
ConvexBody rectangle(double w, double h);
/// Axis-aligned box [lo, hi] in 2D.
ConvexBody box2(double x0, double y0, double x1, double y1);
/// [0,1]^3
ConvexBody unit_cube();
/// Regular n-gon with the given circumradius, centred at the origin, one
/// vertex on the positive x-axis.
ConvexBody regular_ngon(int n, double circumradius = 1.0);
/// [-2,2]^2 cut by x + y <= 3.
ConvexBody cut_square();
/// conv{o, e1, e2, e3}
ConvexBody corner_simplex();
/// Regular tetrahedron with edge length 2*sqrt(2), centred at the origin.
ConvexBody regular_tetrahedron();
/// Polygon through n points of the ellipse x^2/a^2 + y^2/b^2 = 1 at equal
/// parameter steps.
ConvexBody ellipse_polygon(int n, double a, double b);

/// Hull of `count` points drawn uniformly from the unit disk / ball.
ConvexBody random_hull2(int count, std::uint64_t seed);
ConvexBody random_hull3(int count, std::uint64_t seed);

/// Named generators: square, cube, rect:WxH, regular-ngon:N,
/// random-hull:N[:SEED], random-hull3:N[:SEED], cut-square, tetrahedron,
/// regular-tetrahedron, ellipse:N:A:B. `seed` replaces the default seed of
/// the random generators when nonzero. Throws InvalidArgument otherwise.
ConvexBody generate(const std::string& name, std::uint64_t seed = 0);

}  // namespace abrade::shapes

#endif  // ABRADE_SHAPES_HPP
