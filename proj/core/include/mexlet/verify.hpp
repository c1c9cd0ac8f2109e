#ifndef MEXLET_VERIFY_HPP
#define MEXLET_VERIFY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mexlet/filter.hpp"
#include "mexlet/zonal.hpp"

namespace mexlet {

// Every gate threshold lives here so reports can be retuned without
// re-running the measurements.
struct Thresholds {
  double tail_uniformity = 3.0;
  double tail_default_scaled_angle = 8.0;
  double tail_scaled_angle_cap = 10.0;
  double psf_rel = 1e-8;
  double psf_abs_floor = 1e-10;  // scaled by eps^-2 in the guard
  double eta_rel = 1e-10;
  double level_sum_bracket = 0.01;
  double periodicity_rel = 1e-12;
  double fourier_rel = 1e-8;
  double theta_zero_rel = 0.01;
  double laplacian_dev = 1e-13;
  double slope_tol = 0.1;
  double l2_closed_rel = 1e-9;
  double frame_slack = 0.05;
  double frame_leak = 1e-10;
  double frame_exact_rel = 1e-10;
  double partition_area_rel = 1e-12;
  double partition_constant_spread = 2.5;
};
inline constexpr Thresholds kThresholds{};

// Tail envelope eps^{-2} e^{-(theta/2eps)^2} (1 + |H_{2s}(theta/eps)|).
double tail_envelope(double B, int j, int s, double theta);

struct TailReport {
  double B = 2.0;
  int s = 1;
  double max_scaled_angle = 8.0;
  int grid_points = 512;
  struct Level {
    int j;
    double theta_max;
    double sup_envelope;         // ratio against the H_{2s}(theta/eps) envelope (gated)
    double sup_half_arg;         // same with H_{2s}(theta/2eps), recorded alongside
    double argmax_scaled_angle;  // theta/2eps at the envelope sup
  };
  std::vector<Level> levels;
  double uniformity = 0.0;
  double uniformity_half_arg = 0.0;
  double c_measured = 0.0;  // max_j sup_envelope
  bool pass = false;
};

TailReport tail_bound_report(double B, int s, std::span<const int> j_list,
                             double max_scaled_angle = kThresholds.tail_default_scaled_angle,
                             int grid_points = 512);

// |Psi(0)| eps^2 per level (HalfInteger series; the Riemann sums of the
// half-line integral).
std::vector<double> theta_zero_values(double B, int s, std::span<const int> j_list);

// (1/2pi) * integral_0^inf u^{2s+1} e^{-u^2} du, evaluated by quadrature;
// tests pin it against the substitution value s!/2.
double theta_zero_limit(int s);

struct FrameOptions {
  int finesse = 2;                          // ring refinement for frame runs
  std::size_t max_cells_per_level = 2'000'000;  // finer levels use the exact limit
};

struct FrameReport {
  double B = 2.0;
  int s = 1;
  int j_min = 0;
  int j_max = 0;
  FrameOptions options;
  struct TermDescriptor {
    int degree;
    double coeff;
  };
  std::vector<TermDescriptor> mixture;  // F's terms, centers omitted
  struct Level {
    int j;
    double energy;     // sum_k |beta_jk|^2
    bool pixelized;    // false: exact infinite-resolution limit
    std::size_t cells;
  };
  std::vector<Level> levels;
  double total = 0.0;
  double norm_squared = 0.0;
  double ratio = 0.0;  // total / ||F||^2
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double exact_total = 0.0;    // pixelization-free energies over the range
  double exact_rhs = 0.0;      // per-degree weight sums times ||F_l||^2
  double exact_rel_dev = 0.0;  // agreement of the two harmonic-domain routes
  double leakage = 0.0;        // weight energy outside [j_min, j_max]
  bool pass = false;
};

// Throws std::invalid_argument when the range leaks more than frame_leak of
// the weight energy (the message carries the estimate).
FrameReport frame_energy_report(const ZonalMixture& F, const FilterParams& base,
                                int j_min, int j_max, const FrameOptions& = {});

// [0, j_max] covering all but leak_tol of the weight energy
std::pair<int, int> frame_j_range(const ZonalMixture& F, const FilterParams& base,
                                  double leak_tol = kThresholds.frame_leak);

// Degree-by-degree audit of the exact-Laplacian recursion: s-1 applications
// of the multiplier l(l+1)/B^{2j} on the shape-1 weight against the shape-s
// weight.  Returns the max relative deviation over l <= l_max.
double laplacian_relation_check(double B, int j, int s, int l_max,
                                WeightVariant variant = WeightVariant::ExactLaplacian);

struct LpReport {
  double B = 2.0;
  int s = 1;
  int j_min = 0;
  int j_max = 0;
  struct Entry {
    int j;
    double p;  // INFINITY for the sup norm
    double norm;
  };
  std::vector<Entry> entries;
  struct Slope {
    double p;
    double fitted;
    double target;  // 2(1/2 - 1/p), or 1 for p = inf
  };
  std::vector<Slope> slopes;
  double l2_closed_rel = 0.0;  // worst quadrature vs closed-form deviation
  bool pass = false;
};

LpReport lp_scaling_report(const FilterParams& base, int j_min, int j_max,
                           std::span<const double> p_list);

// JSON serialisations ({schema: 1, claim, params, measurements[], threshold, pass})
std::string to_json(const TailReport&);
std::string to_json(const FrameReport&);
std::string to_json(const LpReport&);

}  // namespace mexlet

#endif  // MEXLET_VERIFY_HPP
