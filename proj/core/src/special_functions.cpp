#include "mexlet/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mexlet {

double legendre(int l, double x) {
  if (l < 0) throw std::domain_error("legendre: degree must be >= 0");
  if (std::fabs(x) > 1.0 + 1e-12)
    throw std::domain_error("legendre: |x| > 1 (got " + std::to_string(x) + ")");
  x = std::fmin(1.0, std::fmax(-1.0, x));
  LegendreRecurrence rec(x);
  double v = 0.0;
  for (int k = 0; k <= l; ++k) v = rec.next();
  return v;
}

double hermite(int n, double x) {
  if (n < 0) throw std::domain_error("hermite: degree must be >= 0");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double factorial(int m) {
  if (m < 0 || m > 170) throw std::domain_error("factorial: need 0 <= m <= 170");
  double r = 1.0;
  for (int k = 2; k <= m; ++k) r *= k;
  return r;
}

double hermite_envelope_constant(int n) {
  if (n < 1 || n % 2 == 0)
    throw std::domain_error("hermite_envelope_constant: n must be odd");
  int half = (n - 1) / 2;
  double sum = 0.0;
  for (int k = 0; k <= half; ++k)
    sum += std::pow(2.0, 2 * k + 1) / (factorial(2 * k + 1) * factorial(half - k));
  return factorial(n) * sum;
}

}  // namespace mexlet
