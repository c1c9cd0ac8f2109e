#include "mexlet/needlet_field.hpp"

#include <cmath>
#include <stdexcept>

#include "mexlet/parallel.hpp"
#include "mexlet/special_functions.hpp"
#include "mexlet/summation.hpp"

namespace mexlet {

namespace {
constexpr double kInvFourPi = 0.07957747154594767;
}

double evaluate_needlet_at(const FilterParams& params, double cell_area,
                           const UnitVector& center, const UnitVector& x,
                           Summation mode) {
  return std::sqrt(cell_area) *
         ProfileEvaluator(params, 1e-30, mode)(geodesic_distance(x, center));
}

double evaluate_needlet(const FilterParams& params, const Pixelization& pix,
                        std::size_t k, const UnitVector& x) {
  if (k >= pix.size()) throw std::out_of_range("evaluate_needlet: bad cell index");
  return evaluate_needlet_at(params, pix.cells[k].area, pix.cells[k].center, x);
}

NeedletCoefficients analyze(const ZonalMixture& F, const FilterParams& params,
                            const Pixelization& pix, const CubatureGrid& grid) {
  params.validate();
  int needed = F.max_degree() + truncation_degree(params, 1e-15);
  if (grid.degree_exactness < needed)
    throw std::invalid_argument("analyze: cubature degree " +
                                std::to_string(grid.degree_exactness) +
                                " below required " + std::to_string(needed));

  // F at the nodes once; psi per cell
  std::vector<double> f_vals(grid.nodes.size());
  parallel_for(grid.nodes.size(),
               [&](std::size_t i) { f_vals[i] = F.evaluate(grid.nodes[i].point); });

  ProfileEvaluator profile(params, 1e-30, Summation::Compensated);
  NeedletCoefficients out;
  out.params = params;
  out.values.resize(pix.size());
  parallel_for(pix.size(), [&](std::size_t k) {
    const PixelCell& cell = pix.cells[k];
    NeumaierSum acc;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      double theta = geodesic_distance(grid.nodes[i].point, cell.center);
      acc.add(grid.nodes[i].weight * f_vals[i] * profile(theta));
    }
    out.values[k] = std::sqrt(cell.area) * acc.value();
  });
  return out;
}

NeedletCoefficients analyze_exact(const ZonalMixture& F, const FilterParams& params,
                                  const Pixelization& pix) {
  params.validate();
  WeightParams w{params.s, params.weight};
  NeedletCoefficients out;
  out.params = params;
  out.values.resize(pix.size());
  // Weight sampled at the series variant's degree argument: the profile's
  // harmonic coefficient at integer degree l is f_s at l (Integer) or at
  // l + 1/2 (HalfInteger), times (2l+1)/4pi either way.
  std::vector<double> fw(F.terms.size());
  for (std::size_t i = 0; i < F.terms.size(); ++i) {
    double darg = params.series == SeriesVariant::HalfInteger
                      ? F.terms[i].degree + 0.5
                      : static_cast<double>(F.terms[i].degree);
    fw[i] = weight_value(w, params.B, params.j, darg);
  }
  parallel_for(pix.size(), [&](std::size_t k) {
    const PixelCell& cell = pix.cells[k];
    NeumaierSum acc;
    for (std::size_t i = 0; i < F.terms.size(); ++i) {
      const ZonalTerm& t = F.terms[i];
      acc.add(t.coeff * fw[i] * (2.0 * t.degree + 1.0) * kInvFourPi *
              legendre(t.degree, dot(cell.center, t.center)));
    }
    out.values[k] = std::sqrt(cell.area) * acc.value();
  });
  return out;
}

}  // namespace mexlet
