#include "mexlet/cubature.hpp"

#include <cmath>
#include <stdexcept>

#include "mexlet/errors.hpp"

namespace mexlet {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Tricomi-style initial guess, then Newton on P_n
    double x = std::cos(3.14159265358979324 * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    // one more recurrence pass at the converged node for the weight
    double p0 = 1.0, p1 = x;
    for (int m = 2; m <= n; ++m) {
      double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[k] = -std::fabs(x);
    rule.weights[k] = w;
    rule.nodes[n - 1 - k] = std::fabs(x);
    rule.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

CubatureGrid build_cubature(int L) {
  if (L < 0) throw std::domain_error("build_cubature: L must be >= 0");
  if (L > 10'000) throw resource_error("build_cubature: L exceeds cap 1e4");
  CubatureGrid grid;
  grid.degree_exactness = L;
  int n_theta = L + 1;
  int n_phi = 2 * L + 2;
  GaussLegendreRule gl = gauss_legendre(n_theta);
  grid.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  double wphi = 6.28318530717958648 / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    double ct = gl.nodes[i];
    double st = std::sqrt(std::fmax(0.0, 1.0 - ct * ct));
    for (int m = 0; m < n_phi; ++m) {
      double phi = (m + 0.5) * wphi;
      grid.nodes.push_back(
          {{st * std::cos(phi), st * std::sin(phi), ct}, gl.weights[i] * wphi});
    }
  }
  return grid;
}

}  // namespace mexlet
