#include "mexlet/acceptance.hpp"

#include <mpfr.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "mexlet/cubature.hpp"
#include "mexlet/kernel.hpp"
#include "mexlet/pixelization.hpp"
#include "mexlet/summation.hpp"
#include "mexlet/verify.hpp"
#include "mexlet/weights.hpp"

namespace mexlet {

namespace {

constexpr double kPi = 3.14159265358979324;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }
};

// ---------------------------------------------------------------- criterion 1
CriterionResult criterion_eta() {
  Timer t;
  // Quadrature oracle: eta_s = 2 int_0^inf f_s^2(t) dt/t = 2 int t^{4s-1} e^{-2t^2} dt.
  // (The level sum over j has one term per log-window of width ln B and
  // 2 ln B * sum -> eta, which forces the factor 2 on the integral.)
  GaussLegendreRule gl = gauss_legendre(24);
  double worst = 0.0;
  for (int s = 1; s <= 5; ++s) {
    NeumaierSum acc;
    const int panels = 24;
    for (int pnl = 0; pnl < panels; ++pnl) {
      double a = 8.0 * pnl / panels, b = 8.0 * (pnl + 1) / panels;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        double u = 0.5 * (b - a) * gl.nodes[i] + 0.5 * (a + b);
        acc.add(0.5 * (b - a) * gl.weights[i] * std::pow(u, 4 * s - 1) *
                std::exp(-2.0 * u * u));
      }
    }
    double oracle = 2.0 * acc.value();
    worst = std::fmax(worst, std::fabs(eta(s) - oracle) / oracle);
  }
  bool exact1 = std::fabs(eta(1) - 0.25) <= 1e-12;
  CriterionResult r{1, "eta identity vs quadrature (s=1..5)", false, "", 0.0, 1.0};
  r.seconds = t.seconds();
  r.pass = worst <= kThresholds.eta_rel && exact1 && r.seconds < r.budget_seconds;
  r.detail = fmt("max rel dev %.3e (tol 1e-10), eta(1)-1/4 = %.1e", worst,
                 std::fabs(eta(1) - 0.25));
  return r;
}

// ---------------------------------------------------------------- criterion 2
CriterionResult criterion_level_sum() {
  Timer t;
  const double B = 1.02;
  double worst = 0.0;
  for (int s : {1, 2}) {
    for (int i = 0; i < 200; ++i) {
      double x = 1.0 + (B - 1.0) * i / 199.0;
      double v = 2.0 * std::log(B) * level_sum(s, B, x);
      worst = std::fmax(worst, std::fabs(v - eta(s)) / eta(s));
    }
  }
  double period = 0.0;
  for (double B2 : {1.02, 2.0})
    for (double x : {1.0037, 1.37, 2.9}) {
      double a = level_sum(1, B2, x), b = level_sum(1, B2, B2 * x);
      period = std::fmax(period, std::fabs(a - b) / a);
    }
  CriterionResult r{2, "level-sum bracket at B=1.02 and periodicity", false, "", 0.0, 1.0};
  r.seconds = t.seconds();
  r.pass = worst <= kThresholds.level_sum_bracket &&
           period <= kThresholds.periodicity_rel && r.seconds < r.budget_seconds;
  r.detail = fmt("max |2lnB*sum - eta|/eta = %.3e (tol 0.01), periodicity %.2e", worst,
                 period);
  return r;
}

// ---------------------------------------------------------------- criterion 3
CriterionResult criterion_psf() {
  Timer t;
  double worst = 0.0;
  for (double eps : {1.0, 0.5, 0.25})
    for (int s : {1, 2, 3})
      for (int i = 1; i <= 64; ++i) {
        double phi = i * kPi / 65.0;
        double direct = kappa_direct(eps, s, phi);
        double images = kappa_psf(eps, s, phi, 3);
        double guard = std::fmax(std::fabs(direct),
                                 kThresholds.psf_abs_floor / (eps * eps));
        worst = std::fmax(worst, std::fabs(direct - images) / guard);
      }
  CriterionResult r{3, "Poisson-summation identity for K_{eps;s}", false, "", 0.0, 5.0};
  r.seconds = t.seconds();
  r.pass = worst <= kThresholds.psf_rel && r.seconds < r.budget_seconds;
  r.detail = fmt("max guarded rel err %.3e (tol 1e-8) over 64 phi x 3 eps x 3 s", worst);
  return r;
}

// ---------------------------------------------------------------- criterion 4
CriterionResult criterion_fourier() {
  Timer t;
  double worst = 0.0;
  for (int s = 0; s <= 3; ++s)
    for (int i = 1; i <= 40; ++i) {
      double y = 0.25 * i;
      double oracle = fourier_quadrature_oracle(s, y);
      double closed = fourier_weight_transform_magnitude(s, 1.0, 2.0 * y);
      worst = std::fmax(worst, std::fabs(closed - oracle) / oracle);
    }
  // eps scaling spot checks
  for (double eps : {0.5, 2.0})
    for (double y : {0.5, 1.5, 3.0}) {
      double oracle = fourier_quadrature_oracle(1, y) / (eps * eps);
      double closed = fourier_weight_transform_magnitude(1, eps, 2.0 * eps * y);
      worst = std::fmax(worst, std::fabs(closed - oracle) / oracle);
    }
  CriterionResult r{4, "Fourier closed form vs quadrature (s=0..3)", false, "", 0.0, 5.0};
  r.seconds = t.seconds();
  r.pass = worst <= kThresholds.fourier_rel && r.seconds < r.budget_seconds;
  r.detail = fmt("max rel dev %.3e (tol 1e-8) for omega/2eps <= 10", worst);
  return r;
}

// ---------------------------------------------------------------- criterion 5
CriterionResult criterion_tail(const AcceptanceConfig& cfg) {
  Timer t;
  std::vector<int> js;
  for (int j = cfg.j_min; j <= cfg.j_max; ++j) js.push_back(j);
  bool ok = true;
  std::string detail;
  for (int s : cfg.s_list) {
    TailReport rep = tail_bound_report(cfg.B, s, js);
    ok = ok && rep.pass;
    detail += fmt("s=%d uniformity %.3f C=%.4f; ", s, rep.uniformity,
                  rep.c_measured);
  }
  CriterionResult r{5, "tail envelope uniform over j", false, "", 0.0, 60.0};
  r.seconds = t.seconds();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = detail + "(uniformity tol 3)";
  return r;
}

// ---------------------------------------------------------------- criterion 6
CriterionResult criterion_theta_zero() {
  Timer t;
  double worst = 0.0;
  const int js[] = {6};
  for (int s : {1, 2}) {
    double limit = theta_zero_limit(s);
    std::vector<double> vals = theta_zero_values(2.0, s, js);
    worst = std::fmax(worst, std::fabs(vals[0] - limit) / limit);
  }
  CriterionResult r{6, "theta=0 value against half-line integral", false, "", 0.0, 5.0};
  r.seconds = t.seconds();
  r.pass = worst <= kThresholds.theta_zero_rel && r.seconds < r.budget_seconds;
  r.detail = fmt("max rel dev %.3e at j=6 (tol 0.01)", worst);
  return r;
}

// ---------------------------------------------------------------- criterion 7
CriterionResult criterion_laplacian() {
  Timer t;
  double worst = 0.0;
  for (int s : {2, 3, 4})
    for (int j : {0, 3}) worst = std::fmax(worst, laplacian_relation_check(2.0, j, s, 200));
  CriterionResult r{7, "exact-Laplacian shape recursion", false, "", 0.0, 1.0};
  r.seconds = t.seconds();
  r.pass = worst <= kThresholds.laplacian_dev && r.seconds < r.budget_seconds;
  r.detail = fmt("max rel deviation %.3e (tol 1e-13), s<=4, l<=200", worst);
  return r;
}

// ---------------------------------------------------------------- criterion 8
CriterionResult criterion_lp() {
  Timer t;
  FilterParams base{2.0, 0, 1, SeriesVariant::Integer, WeightVariant::SquaredArgument};
  const double ps[] = {1.0, 2.0, 4.0, INFINITY};
  LpReport rep = lp_scaling_report(base, 2, 5, ps);
  CriterionResult r{8, "L^p norm scaling exponents", false, "", 0.0, 120.0};
  r.seconds = t.seconds();
  r.pass = rep.pass && r.seconds < r.budget_seconds;
  std::string d;
  for (const auto& s : rep.slopes)
    d += fmt("p=%s slope %.3f->%.1f; ", std::isinf(s.p) ? "inf" : fmt("%g", s.p).c_str(),
             s.fitted, s.target);
  r.detail = d + fmt("L2 closed-form dev %.2e (tol 1e-9, slope tol 0.1)", rep.l2_closed_rel);
  return r;
}

// ---------------------------------------------------------------- criterion 9
CriterionResult criterion_frame() {
  Timer t;
  ZonalMixture F = default_frame_mixture();
  FilterParams base{1.3, 0, 1, SeriesVariant::Integer, WeightVariant::SquaredArgument};
  auto [j_min, j_max] = frame_j_range(F, base);
  FrameReport rep = frame_energy_report(F, base, j_min, j_max);
  CriterionResult r{9, "frame energy in the level-sum bracket", false, "", 0.0, 120.0};
  r.seconds = t.seconds();
  r.pass = rep.pass && r.seconds < r.budget_seconds;
  r.detail = fmt("ratio %.6f in [%.6f, %.6f] +-5%%, exact-identity dev %.1e, leak %.1e, j<=%d",
                 rep.ratio, rep.bracket_lo, rep.bracket_hi, rep.exact_rel_dev,
                 rep.leakage, j_max);
  return r;
}

// --------------------------------------------------------------- criterion 10
CriterionResult criterion_partition() {
  Timer t;
  bool ok = true;
  double worst_area_dev = 0.0;
  double cb_lo = INFINITY, cb_hi = 0.0, ca_lo = INFINITY, ca_hi = 0.0;
  std::size_t misplaced = 0;
  std::mt19937_64 rng(0x6d65786c657400ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int j = 0; j <= 5; ++j) {
    Pixelization pix = build_partition(2.0, j);
    NeumaierSum area;
    double dmax = 0.0, amin = INFINITY;
    for (const PixelCell& c : pix.cells) {
      area.add(c.area);
      dmax = std::fmax(dmax, c.diameter);
      amin = std::fmin(amin, c.area);
    }
    worst_area_dev =
        std::fmax(worst_area_dev, std::fabs(area.value() - 4.0 * kPi) / (4.0 * kPi));
    double bj = std::pow(2.0, j);
    cb_lo = std::fmin(cb_lo, dmax * bj);
    cb_hi = std::fmax(cb_hi, dmax * bj);
    ca_lo = std::fmin(ca_lo, amin * bj * bj);
    ca_hi = std::fmax(ca_hi, amin * bj * bj);

    // 1e5 random points must land in exactly one cell (full scan over the
    // ring bands and their sectors, angles hoisted out of the loop)
    for (int n = 0; n < 100'000; ++n) {
      double z = 2.0 * unit(rng) - 1.0;
      double phi = 2.0 * kPi * unit(rng);
      double theta = std::acos(std::fmin(1.0, std::fmax(-1.0, z)));
      int hits = 0;
      for (int rr = 0; rr < pix.scheme.n_rings; ++rr) {
        RingScheme::Ring ring = pix.scheme.ring(rr);
        bool in_band = theta >= ring.theta_lo &&
                       (rr + 1 == pix.scheme.n_rings ? theta <= ring.theta_hi
                                                     : theta < ring.theta_hi);
        if (!in_band) continue;
        double width = 2.0 * kPi / ring.cells;
        for (int m = 0; m < ring.cells; ++m) {
          bool in_sector = phi >= m * width && (m + 1 == ring.cells
                                                    ? phi <= 2.0 * kPi
                                                    : phi < (m + 1) * width);
          if (in_sector) ++hits;
        }
      }
      if (hits != 1) ++misplaced;
    }

    // locate/contains consistency on a subsample
    for (int n = 0; n < 10'000; ++n) {
      double z = 2.0 * unit(rng) - 1.0;
      double phi = 2.0 * kPi * unit(rng);
      double st = std::sqrt(std::fmax(0.0, 1.0 - z * z));
      UnitVector v{st * std::cos(phi), st * std::sin(phi), z};
      if (!pix.contains(pix.locate(v), v)) ++misplaced;
    }
  }
  double cb_spread = cb_hi / cb_lo, ca_spread = ca_hi / ca_lo;
  ok = worst_area_dev <= kThresholds.partition_area_rel && misplaced == 0 &&
       cb_spread <= kThresholds.partition_constant_spread &&
       ca_spread <= kThresholds.partition_constant_spread;
  CriterionResult r{10, "partition integrity and scaling constants", false, "", 0.0, 30.0};
  r.seconds = t.seconds();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = fmt("area dev %.1e, misplaced %zu, c_B=%.3f (spread %.2f), c'_B=%.3f (spread %.2f)",
                 worst_area_dev, misplaced, cb_hi, cb_spread, ca_lo, ca_spread);
  return r;
}

}  // namespace

ZonalMixture default_frame_mixture() {
  ZonalMixture F;
  F.terms.push_back({4, UnitVector::normalized(0.3, -0.2, 0.93), 1.0});
  F.terms.push_back({9, UnitVector::normalized(-0.55, 0.8, 0.1), 0.8});
  return F;
}

double fourier_quadrature_oracle(int s, double y) {
  constexpr int kPrec = 256;
  constexpr int kNodes = 24;
  constexpr int kPanels = 60;
  constexpr double kUpper = 12.0;

  // Gauss-Legendre nodes at working precision, computed once
  static std::vector<__mpfr_struct> nodes, weights;
  if (nodes.empty()) {
    nodes.resize(kNodes);
    weights.resize(kNodes);
    mpfr_t x, p0, p1, p2, dp, tmp;
    mpfr_inits2(kPrec, x, p0, p1, p2, dp, tmp, (mpfr_ptr)nullptr);
    for (int k = 0; k < kNodes; ++k) {
      mpfr_init2(&nodes[k], kPrec);
      mpfr_init2(&weights[k], kPrec);
      mpfr_set_d(x, std::cos(kPi * (k + 0.75) / (kNodes + 0.5)), MPFR_RNDN);
      for (int it = 0; it < 10; ++it) {
        mpfr_set_ui(p0, 1, MPFR_RNDN);
        mpfr_set(p1, x, MPFR_RNDN);
        for (int m = 2; m <= kNodes; ++m) {
          mpfr_mul(p2, x, p1, MPFR_RNDN);
          mpfr_mul_ui(p2, p2, 2 * m - 1, MPFR_RNDN);
          mpfr_mul_ui(tmp, p0, m - 1, MPFR_RNDN);
          mpfr_sub(p2, p2, tmp, MPFR_RNDN);
          mpfr_div_ui(p2, p2, m, MPFR_RNDN);
          mpfr_set(p0, p1, MPFR_RNDN);
          mpfr_set(p1, p2, MPFR_RNDN);
        }
        // dp = n (x p1 - p0) / (x^2 - 1)
        mpfr_mul(dp, x, p1, MPFR_RNDN);
        mpfr_sub(dp, dp, p0, MPFR_RNDN);
        mpfr_mul_ui(dp, dp, kNodes, MPFR_RNDN);
        mpfr_mul(tmp, x, x, MPFR_RNDN);
        mpfr_sub_ui(tmp, tmp, 1, MPFR_RNDN);
        mpfr_div(dp, dp, tmp, MPFR_RNDN);
        mpfr_div(tmp, p1, dp, MPFR_RNDN);
        mpfr_sub(x, x, tmp, MPFR_RNDN);
      }
      mpfr_set(&nodes[k], x, MPFR_RNDN);
      // w = 2 / ((1 - x^2) dp^2), dp recomputed at the converged node
      mpfr_set_ui(p0, 1, MPFR_RNDN);
      mpfr_set(p1, x, MPFR_RNDN);
      for (int m = 2; m <= kNodes; ++m) {
        mpfr_mul(p2, x, p1, MPFR_RNDN);
        mpfr_mul_ui(p2, p2, 2 * m - 1, MPFR_RNDN);
        mpfr_mul_ui(tmp, p0, m - 1, MPFR_RNDN);
        mpfr_sub(p2, p2, tmp, MPFR_RNDN);
        mpfr_div_ui(p2, p2, m, MPFR_RNDN);
        mpfr_set(p0, p1, MPFR_RNDN);
        mpfr_set(p1, p2, MPFR_RNDN);
      }
      mpfr_mul(dp, x, p1, MPFR_RNDN);
      mpfr_sub(dp, dp, p0, MPFR_RNDN);
      mpfr_mul_ui(dp, dp, kNodes, MPFR_RNDN);
      mpfr_mul(tmp, x, x, MPFR_RNDN);
      mpfr_sub_ui(tmp, tmp, 1, MPFR_RNDN);
      mpfr_div(dp, dp, tmp, MPFR_RNDN);
      mpfr_mul(tmp, dp, dp, MPFR_RNDN);
      mpfr_mul(p2, x, x, MPFR_RNDN);
      mpfr_ui_sub(p2, 1, p2, MPFR_RNDN);
      mpfr_mul(tmp, tmp, p2, MPFR_RNDN);
      mpfr_ui_div(&weights[k], 2, tmp, MPFR_RNDN);
    }
    mpfr_clears(x, p0, p1, p2, dp, tmp, (mpfr_ptr)nullptr);
  }

  mpfr_t acc, u, f, tmp, ym, step;
  mpfr_inits2(kPrec, acc, u, f, tmp, ym, step, (mpfr_ptr)nullptr);
  mpfr_set_zero(acc, 1);
  mpfr_set_d(ym, y, MPFR_RNDN);
  // panel arithmetic at working precision so adjacent panels tile exactly
  mpfr_set_ui(step, static_cast<unsigned>(kUpper), MPFR_RNDN);
  mpfr_div_ui(step, step, kPanels, MPFR_RNDN);
  for (int pnl = 0; pnl < kPanels; ++pnl) {
    for (int k = 0; k < kNodes; ++k) {
      // u = step * (pnl + (node+1)/2)
      mpfr_add_ui(u, &nodes[k], 1, MPFR_RNDN);
      mpfr_div_ui(u, u, 2, MPFR_RNDN);
      mpfr_add_ui(u, u, pnl, MPFR_RNDN);
      mpfr_mul(u, u, step, MPFR_RNDN);
      // f = u^{2s+1} e^{-u^2} sin(2 y u)
      mpfr_pow_ui(f, u, 2 * s + 1, MPFR_RNDN);
      mpfr_mul(tmp, u, u, MPFR_RNDN);
      mpfr_neg(tmp, tmp, MPFR_RNDN);
      mpfr_exp(tmp, tmp, MPFR_RNDN);
      mpfr_mul(f, f, tmp, MPFR_RNDN);
      mpfr_mul(tmp, ym, u, MPFR_RNDN);
      mpfr_mul_ui(tmp, tmp, 2, MPFR_RNDN);
      mpfr_sin(tmp, tmp, MPFR_RNDN);
      mpfr_mul(f, f, tmp, MPFR_RNDN);
      mpfr_mul(f, f, &weights[k], MPFR_RNDN);
      mpfr_mul(f, f, step, MPFR_RNDN);
      mpfr_div_ui(f, f, 2, MPFR_RNDN);
      mpfr_add(acc, acc, f, MPFR_RNDN);
    }
  }
  mpfr_mul_ui(acc, acc, 2, MPFR_RNDN);
  mpfr_abs(acc, acc, MPFR_RNDN);
  double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, u, f, tmp, ym, step, (mpfr_ptr)nullptr);
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_eta());
  results.push_back(criterion_level_sum());
  results.push_back(criterion_psf());
  results.push_back(criterion_fourier());
  results.push_back(criterion_tail(config));
  results.push_back(criterion_theta_zero());
  results.push_back(criterion_laplacian());
  results.push_back(criterion_lp());
  results.push_back(criterion_frame());
  results.push_back(criterion_partition());
  return results;
}

}  // namespace mexlet
