#ifndef ABRADE_TYPES_HPP
#define ABRADE_TYPES_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <stdexcept>
#include <string>

namespace abrade {

/// Points and directions. Planar bodies keep z == 0 so that dot products,
/// norms and cross products need no special casing.
using Vec3 = Eigen::Vector3d;

enum class ErrorCode {
  InvalidArgument,
  DegenerateInput,
  Unbounded,
  EmptyOrLowerDim,
  EmptyBody,
  DimensionMismatch,
  BadRange,
  Collapse,
  RefOnBoundary,
  RefOutside,
  Numerical,
};

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// The set {x : <x, normal> <= offset}; normal has unit length.
struct HalfSpace {
  Vec3 normal = Vec3::Zero();
  double offset = 0.0;

  double slack(const Vec3& x) const { return offset - normal.dot(x); }
};

/// ratio * A + translation == B
struct Homothety {
  double ratio = 1.0;
  Vec3 translation = Vec3::Zero();
};

inline Vec3 make_point(double x, double y) { return Vec3(x, y, 0.0); }
inline Vec3 make_point(double x, double y, double z) { return Vec3(x, y, z); }

}  // namespace abrade

#endif  // ABRADE_TYPES_HPP
