#ifndef MEXLET_ZONAL_HPP
#define MEXLET_ZONAL_HPP

#include <vector>

#include "mexlet/geometry.hpp"

namespace mexlet {

// F(x) = sum_i c_i ((2 l_i + 1)/4pi) P_{l_i}(<x, z_i>): band-limited test
// functions with exactly known harmonic content.  The addition theorem turns
// every inner product into Legendre evaluations at center dot products, so no
// spherical-harmonic basis is needed anywhere.
struct ZonalTerm {
  int degree = 0;
  UnitVector center;
  double coeff = 0.0;
};

struct ZonalMixture {
  std::vector<ZonalTerm> terms;

  double evaluate(const UnitVector& x) const;
  int max_degree() const;
};

// exact <F, G>: pairs of equal degree contribute
// c_i d_j ((2l+1)/4pi) P_l(<z_i, z_j>)
double zonal_inner_product(const ZonalMixture& F, const ZonalMixture& G);

inline double norm_squared(const ZonalMixture& F) { return zonal_inner_product(F, F); }

}  // namespace mexlet

#endif  // MEXLET_ZONAL_HPP
