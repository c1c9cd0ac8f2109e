#ifndef MEXLET_ACCEPTANCE_HPP
#define MEXLET_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "mexlet/zonal.hpp"

namespace mexlet {

// Parameters threaded into the criteria that accept them (tail suite);
// everything else is pinned by the criterion itself.
struct AcceptanceConfig {
  double B = 2.0;
  std::vector<int> s_list{1, 2, 3};
  int j_min = 2;
  int j_max = 6;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

// Runs the full acceptance suite in order; one result per criterion.  A
// criterion passes only if its measurements meet the gate and it finishes
// within its runtime budget.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config = {});

// The band-limited mixture used by the frame criterion (degrees 4 and 9,
// fixed generic centers).
ZonalMixture default_frame_mixture();

// |2 integral_0^inf u^{2s+1} e^{-u^2} sin(2 y u) du| by 256-bit composite
// Gauss-Legendre quadrature.  The e^{+y^2}-level cancellation in the
// oscillatory integral is far beyond 64-bit (and double-double) headroom for
// y up to 10, so the oracle runs in extended precision.
double fourier_quadrature_oracle(int s, double y);

}  // namespace mexlet

#endif  // MEXLET_ACCEPTANCE_HPP
