#ifndef MEXLET_GEOMETRY_HPP
#define MEXLET_GEOMETRY_HPP

#include <cmath>

namespace mexlet {

struct UnitVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  static UnitVector from_spherical(double theta, double phi) {
    double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
  }

  // normalised copy of an arbitrary nonzero vector
  static UnitVector normalized(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    return {x / n, y / n, z / n};
  }

  double colatitude() const { return std::acos(std::fmin(1.0, std::fmax(-1.0, z))); }

  double azimuth() const {
    double p = std::atan2(y, x);
    return p < 0.0 ? p + 6.283185307179586 : p;
  }
};

inline double dot(const UnitVector& a, const UnitVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// arccos of the clamped dot product; clamping absorbs roundoff at the
// endpoints, so no domain error is possible for unit inputs.
inline double geodesic_distance(const UnitVector& a, const UnitVector& b) {
  return std::acos(std::fmin(1.0, std::fmax(-1.0, dot(a, b))));
}

}  // namespace mexlet

#endif  // MEXLET_GEOMETRY_HPP
