#include "mexlet/zonal.hpp"

#include "mexlet/special_functions.hpp"
#include "mexlet/summation.hpp"

namespace mexlet {

namespace {
constexpr double kInvFourPi = 0.07957747154594767;
}

double ZonalMixture::evaluate(const UnitVector& x) const {
  NeumaierSum acc;
  for (const ZonalTerm& t : terms)
    acc.add(t.coeff * (2.0 * t.degree + 1.0) * kInvFourPi *
            legendre(t.degree, dot(x, t.center)));
  return acc.value();
}

int ZonalMixture::max_degree() const {
  int m = 0;
  for (const ZonalTerm& t : terms)
    if (t.degree > m) m = t.degree;
  return m;
}

double zonal_inner_product(const ZonalMixture& F, const ZonalMixture& G) {
  NeumaierSum acc;
  for (const ZonalTerm& a : F.terms)
    for (const ZonalTerm& b : G.terms) {
      if (a.degree != b.degree) continue;  // orthogonality across degrees
      acc.add(a.coeff * b.coeff * (2.0 * a.degree + 1.0) * kInvFourPi *
              legendre(a.degree, dot(a.center, b.center)));
    }
  return acc.value();
}

}  // namespace mexlet
