#ifndef MEXLET_CUBATURE_HPP
#define MEXLET_CUBATURE_HPP

#include <vector>

#include "mexlet/geometry.hpp"

namespace mexlet {

// Gauss-Legendre nodes/weights on [-1, 1]; Newton iteration on P_n.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

struct CubatureNode {
  UnitVector point;
  double weight;
};

// Product rule: (L+1) Gauss-Legendre colatitude nodes x (2L+2) uniform
// azimuths.  Integrates spherical polynomials of degree <= L exactly (with
// headroom; the GL factor alone is exact through degree 2L+1).
struct CubatureGrid {
  int degree_exactness = 0;
  std::vector<CubatureNode> nodes;
};

// Throws resource_error for L > 1e4.
CubatureGrid build_cubature(int L);

}  // namespace mexlet

#endif  // MEXLET_CUBATURE_HPP
