#include "mexlet/needlet_field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace mexlet;

namespace {
constexpr double kPi = 3.14159265358979324;

FilterParams integer_params(double B, int j, int s) {
  return {B, j, s, SeriesVariant::Integer, WeightVariant::SquaredArgument};
}

UnitVector rotate(const UnitVector& axis, double angle, const UnitVector& v) {
  double c = std::cos(angle), s = std::sin(angle);
  double d = dot(axis, v);
  return {v.x * c + (axis.y * v.z - axis.z * v.y) * s + axis.x * d * (1 - c),
          v.y * c + (axis.z * v.x - axis.x * v.z) * s + axis.y * d * (1 - c),
          v.z * c + (axis.x * v.y - axis.y * v.x) * s + axis.z * d * (1 - c)};
}
}  // namespace

TEST_CASE("needlet peaks at its center and is zonal") {
  FilterParams p = integer_params(2.0, 2, 1);
  Pixelization pix = build_partition(2.0, 2);
  std::size_t k = 7;
  const PixelCell& cell = pix.cells[k];

  double peak = evaluate_needlet(p, pix, k, cell.center);
  CHECK(peak > 0.0);
  CHECK(peak == doctest::Approx(std::sqrt(cell.area) * needlet_profile(p, 0.0)));

  // two points at the same distance from the center agree
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  UnitVector probe = rotate(UnitVector::normalized(-cell.center.y, cell.center.x, 0.0),
                            0.4, cell.center);
  for (int i = 0; i < 8; ++i) {
    UnitVector probe2 = rotate(cell.center, u(rng), probe);
    CHECK(evaluate_needlet(p, pix, k, probe2) ==
          doctest::Approx(evaluate_needlet(p, pix, k, probe)).epsilon(1e-14));
  }

  CHECK_THROWS_AS(evaluate_needlet(p, pix, pix.size(), probe), std::out_of_range);
}

TEST_CASE("needlet values are invariant under simultaneous rotation") {
  FilterParams p = integer_params(2.0, 3, 2);
  UnitVector center = UnitVector::normalized(0.3, 0.77, 0.56);
  UnitVector x = UnitVector::normalized(-0.5, 0.6, 0.63);
  UnitVector axis = UnitVector::normalized(2.0, -1.0, 0.4);
  double lambda = 0.01;
  double before = evaluate_needlet_at(p, lambda, center, x);
  for (double angle : {0.3, 1.7, 2.9}) {
    double after =
        evaluate_needlet_at(p, lambda, rotate(axis, angle, center), rotate(axis, angle, x));
    CHECK(after == doctest::Approx(before).epsilon(1e-12));
  }
}

TEST_CASE("Gaussian envelope bound for half-integer needlets, uniform over j") {
  // |psi| <= C_s B^j e^{-(theta/2eps)^2} (1 + (theta/eps)^{2s}); measured
  // C_s ~ 0.161 / 0.321 / 0.963 with j-spread < 1.2 (B = 2, j = 2..5)
  const double cap[] = {0.17, 0.34, 1.01};
  for (int s : {1, 2, 3}) {
    double lo = INFINITY, hi = 0.0;
    for (int j = 2; j <= 5; ++j) {
      FilterParams p{2.0, j, s, SeriesVariant::HalfInteger, WeightVariant::SquaredArgument};
      double eps = p.eps();
      double lambda = make_ring_scheme(2.0, j).ring(0).cell_area;
      ProfileEvaluator eval(p);
      double sup = 0.0;
      for (int i = 0; i <= 256; ++i) {
        double theta = std::fmin(kPi, 10.0 * eps) * i / 256.0;
        double u = theta / (2.0 * eps);
        double denom = std::pow(2.0, j) * std::exp(-u * u) *
                       (1.0 + std::pow(theta / eps, 2 * s));
        sup = std::fmax(sup, std::sqrt(lambda) * std::fabs(eval(theta)) / denom);
      }
      lo = std::fmin(lo, sup);
      hi = std::fmax(hi, sup);
    }
    CHECK(hi <= cap[s - 1]);
    CHECK(hi / lo < 1.2);
  }
}

TEST_CASE("analyze: empty mixture gives zero coefficients") {
  FilterParams p = integer_params(2.0, 2, 1);
  Pixelization pix = build_partition(2.0, 2);
  CubatureGrid grid = build_cubature(truncation_degree(p, 1e-15) + 1);
  ZonalMixture empty;
  NeedletCoefficients beta = analyze(empty, p, pix, grid);
  for (double b : beta.values) CHECK(b == 0.0);
}

TEST_CASE("analyze by cubature matches the exact harmonic oracle") {
  FilterParams p = integer_params(2.0, 2, 1);
  Pixelization pix = build_partition(2.0, 2);
  ZonalMixture F{{{4, UnitVector::normalized(0.33, -0.1, 0.94), 1.0}}};
  int degree = F.max_degree() + truncation_degree(p, 1e-15);
  CubatureGrid grid = build_cubature(degree);

  NeedletCoefficients by_cubature = analyze(F, p, pix, grid);
  NeedletCoefficients by_oracle = analyze_exact(F, p, pix);
  REQUIRE(by_cubature.values.size() == pix.size());

  double bmax = 0.0;
  for (double b : by_oracle.values) bmax = std::fmax(bmax, std::fabs(b));
  for (std::size_t k = 0; k < pix.size(); ++k)
    CHECK(std::fabs(by_cubature.values[k] - by_oracle.values[k]) <= 1e-9 * bmax);

  // refining the grid does not move the coefficients
  CubatureGrid finer = build_cubature(degree + 8);
  NeedletCoefficients again = analyze(F, p, pix, finer);
  for (std::size_t k = 0; k < pix.size(); ++k)
    CHECK(std::fabs(again.values[k] - by_cubature.values[k]) <= 1e-12 * bmax);

  // too-coarse grid violates the precondition
  CubatureGrid coarse = build_cubature(8);
  CHECK_THROWS_AS(analyze(F, p, pix, coarse), std::invalid_argument);
}

TEST_CASE("analyze agrees across routes for the half-integer series too") {
  FilterParams p{2.0, 2, 1, SeriesVariant::HalfInteger, WeightVariant::SquaredArgument};
  Pixelization pix = build_partition(2.0, 2);
  ZonalMixture F{{{3, UnitVector::normalized(-0.2, 0.4, 0.89), 0.9}}};
  CubatureGrid grid = build_cubature(F.max_degree() + truncation_degree(p, 1e-15));
  NeedletCoefficients a = analyze(F, p, pix, grid);
  NeedletCoefficients b = analyze_exact(F, p, pix);
  double bmax = 0.0;
  for (double v : b.values) bmax = std::fmax(bmax, std::fabs(v));
  for (std::size_t k = 0; k < pix.size(); ++k)
    CHECK(std::fabs(a.values[k] - b.values[k]) <= 1e-9 * bmax);
}
