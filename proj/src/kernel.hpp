#ifndef ABRADE_KERNEL_HPP
#define ABRADE_KERNEL_HPP

#include "convex_body.hpp"

#include <optional>

namespace abrade {

struct SupportResult {
  double value = 0.0;
  Vec3 witness = Vec3::Zero();
};

/// h_K(u) = max over vertices of <v, u>, together with a maximizing vertex.
SupportResult support(const ConvexBody& body, const Vec3& u);

/// Hull of all pairwise vertex sums.
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

/// lambda * K. lambda == 0 yields the singleton {o}.
ConvexBody scaled(const ConvexBody& body, double lambda);

ConvexBody translated(const ConvexBody& body, const Vec3& v);

/// Finds (ratio, translation) with ratio * a + translation == b, matching
/// facet normals first and then fitting the support values on the shared
/// normals by least squares. Returns nullopt if the normal sets differ, the
/// fit residual exceeds tol, or the vertex sets do not correspond.
std::optional<Homothety> homothety_check(const ConvexBody& a, const ConvexBody& b,
                                         double tol = 1e-7);

void require_same_dim(const ConvexBody& a, const ConvexBody& b);

}  // namespace abrade

#endif  // ABRADE_KERNEL_HPP
