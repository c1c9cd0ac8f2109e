#ifndef MEXLET_NEEDLET_FIELD_HPP
#define MEXLET_NEEDLET_FIELD_HPP

#include <cstddef>
#include <vector>

#include "mexlet/cubature.hpp"
#include "mexlet/kernel.hpp"
#include "mexlet/pixelization.hpp"
#include "mexlet/zonal.hpp"

namespace mexlet {

// psi_{jk;s}(x) = sqrt(lambda_jk) Psi(d(x, xi_jk)); zonal around the cell
// center by construction.
double evaluate_needlet(const FilterParams& params, const Pixelization& pix,
                        std::size_t k, const UnitVector& x);

// explicit-center form (rotation-invariance tests, plotting)
double evaluate_needlet_at(const FilterParams& params, double cell_area,
                           const UnitVector& center, const UnitVector& x,
                           Summation mode = Summation::Compensated);

struct NeedletCoefficients {
  FilterParams params;
  std::vector<double> values;  // aligned with the pixelization cells
};

// beta_{jk} = <F, psi_{jk}> by cubature.  Requires
// grid.degree_exactness >= max degree of F + truncation_degree(params, 1e-15);
// throws std::invalid_argument otherwise.
NeedletCoefficients analyze(const ZonalMixture& F, const FilterParams& params,
                            const Pixelization& pix, const CubatureGrid& grid);

// Exact harmonic-domain route via the addition theorem:
// beta_{jk} = sqrt(lambda_jk) sum_i c_i f_s(l_i) ((2 l_i + 1)/4pi) P_{l_i}(<xi_jk, z_i>).
NeedletCoefficients analyze_exact(const ZonalMixture& F, const FilterParams& params,
                                  const Pixelization& pix);

}  // namespace mexlet

#endif  // MEXLET_NEEDLET_FIELD_HPP
