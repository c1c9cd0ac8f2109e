#ifndef MEXLET_KERNEL_HPP
#define MEXLET_KERNEL_HPP

#include <span>
#include <vector>

#include "mexlet/dd.hpp"
#include "mexlet/filter.hpp"

namespace mexlet {

// Compensated: terms carried in double-double with error-free-transform
// accumulation.  Plain: 64-bit terms, naive accumulation.  The tail and
// Poisson-summation checks amplify the series cancellation by e^{+(phi/2eps)^2},
// which 64-bit terms cannot survive past theta/eps ~ 10; Compensated is the
// default everywhere.
enum class Summation { Compensated, Plain };

// Smallest L such that the weight-side term magnitude is below
// tail_tol * (its peak) for every l >= L.  Monotone nondecreasing in j.
int truncation_degree(const FilterParams& params, double tail_tol);

// Series evaluator with a cached weight table for one FilterParams.
class ProfileEvaluator {
 public:
  explicit ProfileEvaluator(const FilterParams& params, double tail_tol = 1e-30,
                            Summation mode = Summation::Compensated);

  // explicit truncation override (used by the self-consistency certificate)
  ProfileEvaluator(const FilterParams& params, int l_max, Summation mode);

  // Psi(theta); theta in [0, pi]
  double operator()(double theta) const;

  int l_max() const { return l_max_; }

 private:
  void build_weights(const FilterParams& params);

  FilterParams params_;
  int l_max_;
  Summation mode_;
  std::vector<dd> weights_;  // includes the (l+1/2) / (2l+1) factor
  dd norm_;                  // 1/2pi or 1/4pi
};

// Psi_{eps;s}(theta) for the given variant pair.  One-shot convenience over
// ProfileEvaluator.
double needlet_profile(const FilterParams& params, double theta,
                       Summation mode = Summation::Compensated);

// K_{eps;s}(phi) = sum f_s(eps(l+1/2)) (l+1/2) sin((l+1/2) phi), truncated
// like the profile series.  phi in [0, pi].
double kappa_direct(double eps, int s, double phi,
                    Summation mode = Summation::Compensated);

// Same quantity through its Poisson-summation representation: signed Gaussian
// images of the weight transform at 2*pi*nu + phi, nu in [-nu_max, nu_max].
double kappa_psf(double eps, int s, double phi, int nu_max);

// |F[f_s(eps x) x](omega)| = sqrt(pi)/(2^{2s+1} eps^2) |H_{2s+1}(omega/2eps)|
// e^{-(omega/2eps)^2}.  s >= 0 (s = 0 is the bare Gaussian weight).
double fourier_weight_transform_magnitude(int s, double eps, double omega);

struct KernelProfile {
  FilterParams params;
  std::vector<double> thetas;  // strictly increasing, in [0, pi]
  std::vector<double> values;
  int l_max = 0;
  Summation summation = Summation::Compensated;
  // truncation certificate: max |value(L) - value(2L)| / max|value| over the
  // sampled check points
  double truncation_deviation = 0.0;
};

// Evaluates the profile over a theta grid (parallel over grid points) and
// attaches the doubled-l_max self-consistency certificate.
KernelProfile sample_profile(const FilterParams& params,
                             std::span<const double> thetas,
                             Summation mode = Summation::Compensated,
                             double tail_tol = 1e-30);

}  // namespace mexlet

#endif  // MEXLET_KERNEL_HPP
