#ifndef MEXLET_FILTER_HPP
#define MEXLET_FILTER_HPP

#include <cmath>
#include <stdexcept>

#include "mexlet/weights.hpp"

namespace mexlet {

// HalfInteger: (1/2pi) sum f_s(eps(l+1/2)) (l+1/2) P_l -- half-integer
// sampling keeps the Poisson image sum alternating, which is what gives the
// profile its Gaussian spatial tail.  Integer: (1/4pi) sum f_s(eps l) (2l+1)
// P_l, the analysis kernel behind the needlet family.  The two share
// coefficients, (1/4pi)(2l+1) = (1/2pi)(l+1/2); only the weight argument
// differs.
enum class SeriesVariant { HalfInteger, Integer };

struct FilterParams {
  double B = 2.0;
  int j = 0;
  int s = 1;
  SeriesVariant series = SeriesVariant::HalfInteger;
  WeightVariant weight = WeightVariant::SquaredArgument;

  // eps = B^-j, always derived
  double eps() const { return std::pow(B, -j); }

  void validate() const {
    if (!(B > 1.0)) throw std::domain_error("FilterParams: B must be > 1");
    if (s < 1) throw std::domain_error("FilterParams: s must be >= 1");
  }
};

}  // namespace mexlet

#endif  // MEXLET_FILTER_HPP
