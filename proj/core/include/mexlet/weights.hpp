#ifndef MEXLET_WEIGHTS_HPP
#define MEXLET_WEIGHTS_HPP

namespace mexlet {

// Harmonic-domain weight family.  SquaredArgument is f_s(x) = x^{2s} e^{-x^2}
// applied at x = degree/B^j; ExactLaplacian replaces the squared degree by the
// exact spherical-Laplacian eigenvalue, (l(l+1)/B^{2j})^s exp(-l(l+1)/B^{2j}).
// The two agree asymptotically as the degree grows.
enum class WeightVariant { SquaredArgument, ExactLaplacian };

struct WeightParams {
  int s = 1;  // shape parameter, >= 1
  WeightVariant variant = WeightVariant::SquaredArgument;
};

// f_s(x) = x^{2s} e^{-x^2} for x >= 0 (s >= 0; s = 0 degenerates to the bare
// Gaussian, used by the Fourier-transform checks).
double weight_profile(int s, double x);

// Variant-aware weight at real-valued degree (half-integers serve the
// half-integer series).  Throws std::domain_error for B <= 1 or degree < 0.
double weight_value(const WeightParams& w, double B, int j, double degree);

// eta_s = Gamma(2s)/2^{2s} = (2s-1)!/4^s; normalisation of the level sum.
double eta(int s);

// Truncation half-width that makes the bi-infinite level sum exact to double
// precision: max(40, ceil(12/ln B)).  A fixed width of 40 levels only spans a
// scale factor B^40, which near B = 1 fails to cover the weight's support.
int level_sum_half_width(double B);

// sum over |j - j*| <= j_half_width of f_s^2(x / B^j), j* = round(log_B x).
double level_sum(int s, double B, double x, int j_half_width);

// adaptive-width overload
double level_sum(int s, double B, double x);

}  // namespace mexlet

#endif  // MEXLET_WEIGHTS_HPP
