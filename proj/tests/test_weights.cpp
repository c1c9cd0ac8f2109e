#include "mexlet/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mexlet/cubature.hpp"
#include "mexlet/summation.hpp"

using namespace mexlet;

TEST_CASE("weight_value point values") {
  WeightParams sq1{1, WeightVariant::SquaredArgument};
  CHECK(weight_value(sq1, 2.0, 0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  WeightParams sq2{2, WeightVariant::SquaredArgument};
  CHECK(weight_value(sq2, 2.0, 1, 2.0 * std::sqrt(2.0)) ==
        doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-13));

  for (WeightVariant v : {WeightVariant::SquaredArgument, WeightVariant::ExactLaplacian}) {
    WeightParams w{3, v};
    CHECK(weight_value(w, 1.7, 2, 0.0) == 0.0);
  }

  CHECK_THROWS_AS(weight_value(sq1, 1.0, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(weight_value(sq1, 2.0, 0, -1.0), std::domain_error);
  CHECK_THROWS_AS(weight_value(WeightParams{0}, 2.0, 0, 1.0), std::domain_error);
}

TEST_CASE("exact-Laplacian and squared-argument weights converge") {
  // ratio = (1 + 1/l)^s exp(-l/B^{2j}); it approaches 1 where both l and
  // B^{2j}/l grow.  At l = 1e6, j = 20, B = 2 the deviation is ~9e-8.
  WeightParams sq{1, WeightVariant::SquaredArgument};
  WeightParams ex{1, WeightVariant::ExactLaplacian};
  double a = weight_value(sq, 2.0, 20, 1.0e6);
  double b = weight_value(ex, 2.0, 20, 1.0e6);
  CHECK(b / a == doctest::Approx(1.0).epsilon(1e-6));

  // deviation tracks s/l + l/B^{2j} across shapes
  for (int s : {1, 2, 4}) {
    WeightParams sqs{s, WeightVariant::SquaredArgument};
    WeightParams exs{s, WeightVariant::ExactLaplacian};
    double predicted = std::pow(1.0 + 1e-6, s) * std::exp(-1.0e6 * std::pow(2.0, -40.0));
    double got = weight_value(exs, 2.0, 20, 1.0e6) / weight_value(sqs, 2.0, 20, 1.0e6);
    CHECK(got == doctest::Approx(predicted).epsilon(1e-10));
  }
}

TEST_CASE("eta closed form and quadrature oracle") {
  CHECK(eta(1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eta(2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(eta(3) == doctest::Approx(1.875).epsilon(1e-15));
  CHECK_THROWS_AS(eta(0), std::domain_error);

  // eta_s = 2 int_0^inf f_s(t)^2 dt/t (the level sum carries 2 ln B per term)
  GaussLegendreRule gl = gauss_legendre(24);
  for (int s = 1; s <= 5; ++s) {
    NeumaierSum acc;
    for (int pnl = 0; pnl < 24; ++pnl) {
      double a = 8.0 * pnl / 24, b = 8.0 * (pnl + 1) / 24;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        double t = 0.5 * (b - a) * gl.nodes[i] + 0.5 * (a + b);
        double f = weight_profile(s, t);
        acc.add(0.5 * (b - a) * gl.weights[i] * f * f / t);
      }
    }
    CHECK(eta(s) == doctest::Approx(2.0 * acc.value()).epsilon(1e-10));
  }
}

TEST_CASE("level_sum equals the brute-force oracle") {
  // straightforward sum over j in [-40, 40]
  auto brute = [](int s, double B, double x) {
    double sum = 0.0;
    for (int j = -40; j <= 40; ++j) {
      double f = weight_profile(s, x * std::pow(B, -j));
      sum += f * f;
    }
    return sum;
  };
  for (int s : {1, 2})
    for (double x : {0.37, 1.0, 2.9}) {
      CHECK(level_sum(s, 2.0, x, 40) ==
            doctest::Approx(brute(s, 2.0, x)).epsilon(1e-14));
    }
}

TEST_CASE("level_sum multiplicative periodicity") {
  for (double B : {2.0, 1.3, 1.02})
    for (double x : {1.0, 1.37, 5.21}) {
      double a = level_sum(1, B, x);
      double b = level_sum(1, B, B * x);
      CHECK(std::fabs(a - b) / a < 1e-12);
    }
}

TEST_CASE("level_sum bracket tightens as B -> 1") {
  // subset of the acceptance grid
  for (int s : {1, 2}) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      double x = 1.0 + 0.02 * i / 49.0;
      double v = 2.0 * std::log(1.02) * level_sum(s, 1.02, x);
      worst = std::fmax(worst, std::fabs(v - eta(s)) / eta(s));
    }
    CHECK(worst <= 0.01);
  }
}

TEST_CASE("level_sum domain errors and adaptive width") {
  CHECK_THROWS_AS(level_sum(1, 2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(level_sum(1, 0.9, 1.0), std::domain_error);
  CHECK_THROWS_AS(level_sum(1, 2.0, 1.0, 0), std::domain_error);
  CHECK(level_sum_half_width(2.0) == 40);
  CHECK(level_sum_half_width(1.02) >= 600);
}
