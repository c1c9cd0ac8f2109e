#include "mexlet/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "mexlet/acceptance.hpp"
#include "mexlet/kernel.hpp"
#include "mexlet/special_functions.hpp"

using namespace mexlet;

namespace {
constexpr double kPi = 3.14159265358979324;
}

TEST_CASE("tail report: definition at theta = 0 and frozen uniformity values") {
  const int js[] = {2, 3, 4, 5, 6};
  // frozen from the double-double pipeline (B = 2, 512-point grids)
  const double frozen_uniformity[] = {1.6559, 1.0059, 1.9878};
  for (int s : {1, 2, 3}) {
    TailReport rep = tail_bound_report(2.0, s, js);
    CHECK(rep.pass);
    CHECK(rep.levels.size() == 5);
    CHECK(rep.uniformity ==
          doctest::Approx(frozen_uniformity[s - 1]).epsilon(1e-3));
    CHECK(rep.uniformity <= kThresholds.tail_uniformity);

    // R(0) = |Psi(0)| eps^2 / (1 + |H_{2s}(0)|) is part of every level sup
    for (const auto& lvl : rep.levels) {
      FilterParams p{2.0, lvl.j, s, SeriesVariant::HalfInteger,
                     WeightVariant::SquaredArgument};
      double eps = p.eps();
      double r0 = std::fabs(needlet_profile(p, 0.0)) * eps * eps /
                  (1.0 + std::fabs(hermite(2 * s, 0.0)));
      CHECK(lvl.sup_envelope >= r0 * (1.0 - 1e-12));
      CHECK(std::isfinite(lvl.sup_envelope));
      CHECK(lvl.theta_max ==
            doctest::Approx(std::fmin(kPi, 16.0 * std::pow(2.0, -lvl.j))));
    }
  }
}

TEST_CASE("tail report rejects out-of-contract requests") {
  const int js[] = {2};
  CHECK_THROWS_AS(tail_bound_report(2.0, 1, js, 11.0), std::domain_error);
  const int low[] = {1};
  CHECK_THROWS_AS(tail_bound_report(2.0, 1, low), std::domain_error);
}

TEST_CASE("theta-zero values converge to the half-line integral") {
  CHECK(theta_zero_limit(1) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-12));
  CHECK(theta_zero_limit(2) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
  // quadrature oracle equals s!/2 / (2 pi) for several shapes
  for (int s = 1; s <= 4; ++s)
    CHECK(theta_zero_limit(s) ==
          doctest::Approx(factorial(s) / 2.0 / (2.0 * kPi)).epsilon(1e-12));

  const int js[] = {3, 4, 5, 6};
  for (int s : {1, 2}) {
    std::vector<double> vals = theta_zero_values(2.0, s, js);
    double limit = theta_zero_limit(s);
    for (double v : vals) CHECK(v == doctest::Approx(limit).epsilon(0.01));
  }
}

TEST_CASE("laplacian recursion is exact algebra") {
  CHECK(laplacian_relation_check(2.0, 3, 2, 200) <= 1e-13);
  CHECK(laplacian_relation_check(2.0, 3, 4, 200) <= 1e-13);
  CHECK(laplacian_relation_check(1.3, 5, 3, 200) <= 1e-13);
  CHECK_THROWS_AS(laplacian_relation_check(2.0, 3, 2, 200, WeightVariant::SquaredArgument),
                  std::domain_error);
}

TEST_CASE("frame report: exact identity, bracket, leakage error") {
  FilterParams base{1.3, 0, 1, SeriesVariant::Integer, WeightVariant::SquaredArgument};
  ZonalMixture F = default_frame_mixture();

  auto [j_min, j_max] = frame_j_range(F, base);
  CHECK(j_min == 0);
  CHECK(j_max >= 25);

  FrameReport rep = frame_energy_report(F, base, j_min, j_max);
  CHECK(rep.pass);
  CHECK(rep.exact_rel_dev <= 1e-12);
  CHECK(rep.leakage <= kThresholds.frame_leak);
  CHECK(rep.ratio >= rep.bracket_lo * 0.95);
  CHECK(rep.ratio <= rep.bracket_hi * 1.05);
  // frozen regression value for the pixelized ratio (finesse 2)
  CHECK(rep.ratio == doctest::Approx(0.476488).epsilon(1e-3));
  CHECK(rep.mixture.size() == 2);
  // a too-short range is rejected with the leakage estimate
  CHECK_THROWS_AS(frame_energy_report(F, base, 0, 4), std::invalid_argument);
}

TEST_CASE("frame ratio approaches eta/(2 ln B) as B -> 1") {
  FilterParams base{1.05, 0, 1, SeriesVariant::Integer, WeightVariant::SquaredArgument};
  ZonalMixture F{{{4, UnitVector::normalized(0.3, -0.2, 0.93), 1.0}}};
  auto [j_min, j_max] = frame_j_range(F, base);
  FrameReport rep = frame_energy_report(F, base, j_min, j_max);
  CHECK(rep.ratio * 2.0 * std::log(1.05) == doctest::Approx(eta(1)).epsilon(0.02));
}

TEST_CASE("lp report: near-constant L2 norms and closed-form agreement") {
  FilterParams base{2.0, 0, 1, SeriesVariant::Integer, WeightVariant::SquaredArgument};
  const double ps[] = {2.0, INFINITY};
  LpReport rep = lp_scaling_report(base, 2, 5, ps);
  CHECK(rep.l2_closed_rel <= kThresholds.l2_closed_rel);
  // p = 2 norms are j-independent up to the polar-cell area wobble: measured
  // spread 5.5% over j = 2..5 and 1.3% once past the coarsest level
  std::vector<double> l2;
  for (const auto& e : rep.entries)
    if (e.p == 2.0) l2.push_back(e.norm);
  REQUIRE(l2.size() == 4);
  double lo = INFINITY, hi = 0.0;
  for (double v : l2) {
    lo = std::fmin(lo, v);
    hi = std::fmax(hi, v);
  }
  CHECK(hi / lo < 1.06);
  lo = INFINITY;
  hi = 0.0;
  for (std::size_t i = 1; i < l2.size(); ++i) {
    lo = std::fmin(lo, l2[i]);
    hi = std::fmax(hi, l2[i]);
  }
  CHECK(hi / lo < 1.02);
  for (const auto& s : rep.slopes)
    CHECK(std::fabs(s.fitted - s.target) <= kThresholds.slope_tol);
}

TEST_CASE("reports serialise to the versioned schema deterministically") {
  const int js[] = {2, 3};
  TailReport rep = tail_bound_report(2.0, 1, js);
  std::string a = to_json(rep);
  std::string b = to_json(rep);
  CHECK(a == b);
  auto parsed = nlohmann::json::parse(a);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed.contains("claim"));
  CHECK(parsed.contains("params"));
  CHECK(parsed["measurements"].is_array());
  CHECK(parsed.contains("threshold"));
  CHECK(parsed["pass"].is_boolean());

  FilterParams base{1.3, 0, 1, SeriesVariant::Integer, WeightVariant::SquaredArgument};
  ZonalMixture F = default_frame_mixture();
  auto [j_min, j_max] = frame_j_range(F, base);
  FrameReport fr = frame_energy_report(F, base, j_min, j_max);
  auto fparsed = nlohmann::json::parse(to_json(fr));
  CHECK(fparsed["schema"] == 1);
  CHECK(fparsed["pass"] == true);
  CHECK(fparsed["measurements"].size() == fr.levels.size());
}
