#include "mexlet/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "mexlet/summation.hpp"

namespace mexlet {

double weight_profile(int s, double x) {
  if (s < 0) throw std::domain_error("weight_profile: s must be >= 0");
  if (x < 0.0) throw std::domain_error("weight_profile: x must be >= 0");
  if (x == 0.0) return s == 0 ? 1.0 : 0.0;
  // cut before exp() reaches the denormal range, where intermediate values
  // lose relative precision
  if (x * x > 690.0) return 0.0;
  return std::pow(x, 2 * s) * std::exp(-x * x);
}

double weight_value(const WeightParams& w, double B, int j, double degree) {
  if (w.s < 1) throw std::domain_error("weight_value: s must be >= 1");
  if (!(B > 1.0)) throw std::domain_error("weight_value: B must be > 1");
  if (degree < 0.0) throw std::domain_error("weight_value: degree must be >= 0");
  if (w.variant == WeightVariant::SquaredArgument)
    return weight_profile(w.s, degree * std::pow(B, -j));
  double y = degree * (degree + 1.0) * std::pow(B, -2 * j);
  if (y == 0.0 || y > 690.0) return 0.0;
  return std::pow(y, w.s) * std::exp(-y);
}

double eta(int s) {
  if (s < 1) throw std::domain_error("eta: s must be >= 1");
  // Gamma(2s) = (2s-1)! exactly for integer s
  double g = 1.0;
  for (int k = 2; k <= 2 * s - 1; ++k) g *= k;
  return g / std::pow(4.0, s);
}

int level_sum_half_width(double B) {
  if (!(B > 1.0)) throw std::domain_error("level_sum_half_width: B must be > 1");
  int w = static_cast<int>(std::ceil(12.0 / std::log(B)));
  return w < 40 ? 40 : w;
}

double level_sum(int s, double B, double x, int j_half_width) {
  if (s < 1) throw std::domain_error("level_sum: s must be >= 1");
  if (!(B > 1.0)) throw std::domain_error("level_sum: B must be > 1");
  if (!(x > 0.0)) throw std::domain_error("level_sum: x must be > 0");
  if (j_half_width < 1) throw std::domain_error("level_sum: half width must be >= 1");
  long jstar = std::lround(std::log(x) / std::log(B));
  NeumaierSum acc;
  for (long j = jstar - j_half_width; j <= jstar + j_half_width; ++j) {
    double f = weight_profile(s, x * std::pow(B, -static_cast<double>(j)));
    acc.add(f * f);
  }
  return acc.value();
}

double level_sum(int s, double B, double x) {
  return level_sum(s, B, x, level_sum_half_width(B));
}

}  // namespace mexlet
