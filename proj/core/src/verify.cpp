#include "mexlet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mexlet/cubature.hpp"
#include "mexlet/kernel.hpp"
#include "mexlet/parallel.hpp"
#include "mexlet/pixelization.hpp"
#include "mexlet/special_functions.hpp"
#include "mexlet/summation.hpp"

namespace mexlet {

namespace {
constexpr double kPi = 3.14159265358979324;
constexpr double kInvFourPi = 0.07957747154594767;

double series_degree_arg(SeriesVariant v, int l) {
  return v == SeriesVariant::HalfInteger ? l + 0.5 : static_cast<double>(l);
}

// per-degree squared norms ||F_l||^2 via the addition theorem
std::map<int, double> degree_norms(const ZonalMixture& F) {
  std::map<int, double> out;
  for (const ZonalTerm& a : F.terms)
    for (const ZonalTerm& b : F.terms) {
      if (a.degree != b.degree) continue;
      out[a.degree] += a.coeff * b.coeff * (2.0 * a.degree + 1.0) * kInvFourPi *
                       legendre(a.degree, dot(a.center, b.center));
    }
  return out;
}
}  // namespace

double tail_envelope(double B, int j, int s, double theta) {
  double eps = std::pow(B, -j);
  double u = theta / (2.0 * eps);
  return std::exp(-u * u) / (eps * eps) * (1.0 + std::fabs(hermite(2 * s, theta / eps)));
}

TailReport tail_bound_report(double B, int s, std::span<const int> j_list,
                             double max_scaled_angle, int grid_points) {
  if (!(B > 1.0)) throw std::domain_error("tail_bound_report: B must be > 1");
  if (s < 1) throw std::domain_error("tail_bound_report: s must be >= 1");
  if (!(max_scaled_angle > 0.0) ||
      max_scaled_angle > kThresholds.tail_scaled_angle_cap)
    throw std::domain_error("tail_bound_report: scaled angle outside (0, 10]");
  if (grid_points < 2) throw std::domain_error("tail_bound_report: need >= 2 grid points");

  TailReport rep;
  rep.B = B;
  rep.s = s;
  rep.max_scaled_angle = max_scaled_angle;
  rep.grid_points = grid_points;

  for (int j : j_list) {
    if (j < 2) throw std::domain_error("tail_bound_report: j must be >= 2");
    FilterParams params{B, j, s, SeriesVariant::HalfInteger, WeightVariant::SquaredArgument};
    double eps = params.eps();
    double theta_max = std::fmin(kPi, max_scaled_angle * 2.0 * eps);
    ProfileEvaluator eval(params);

    std::vector<double> env(grid_points), half(grid_points);
    parallel_for(grid_points, [&](std::size_t i) {
      double theta =
          std::fmin(theta_max, theta_max * static_cast<double>(i) / (grid_points - 1));
      double u = theta / (2.0 * eps);
      double amplified = std::fabs(eval(theta)) * eps * eps * std::exp(u * u);
      env[i] = amplified / (1.0 + std::fabs(hermite(2 * s, theta / eps)));
      half[i] = amplified / (1.0 + std::fabs(hermite(2 * s, u)));
    });

    TailReport::Level lvl;
    lvl.j = j;
    lvl.theta_max = theta_max;
    std::size_t arg = 0;
    lvl.sup_envelope = 0.0;
    lvl.sup_half_arg = 0.0;
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (env[i] > lvl.sup_envelope) {
        lvl.sup_envelope = env[i];
        arg = i;
      }
      lvl.sup_half_arg = std::fmax(lvl.sup_half_arg, half[i]);
    }
    lvl.argmax_scaled_angle =
        theta_max * static_cast<double>(arg) / (grid_points - 1) / (2.0 * eps);
    rep.levels.push_back(lvl);
  }

  double lo_s = 0.0, hi_s = 0.0, lo_p = 0.0, hi_p = 0.0;
  bool finite = true;
  for (const auto& lvl : rep.levels) {
    finite = finite && std::isfinite(lvl.sup_envelope) && std::isfinite(lvl.sup_half_arg) &&
             lvl.sup_envelope > 0.0;
    if (lo_s == 0.0 || lvl.sup_envelope < lo_s) lo_s = lvl.sup_envelope;
    hi_s = std::fmax(hi_s, lvl.sup_envelope);
    if (lo_p == 0.0 || lvl.sup_half_arg < lo_p) lo_p = lvl.sup_half_arg;
    hi_p = std::fmax(hi_p, lvl.sup_half_arg);
  }
  rep.uniformity = lo_s > 0.0 ? hi_s / lo_s : INFINITY;
  rep.uniformity_half_arg = lo_p > 0.0 ? hi_p / lo_p : INFINITY;
  rep.c_measured = hi_s;
  rep.pass = finite && rep.uniformity <= kThresholds.tail_uniformity;
  return rep;
}

std::vector<double> theta_zero_values(double B, int s, std::span<const int> j_list) {
  std::vector<double> out;
  out.reserve(j_list.size());
  for (int j : j_list) {
    FilterParams params{B, j, s, SeriesVariant::HalfInteger, WeightVariant::SquaredArgument};
    double eps = params.eps();
    out.push_back(std::fabs(ProfileEvaluator(params)(0.0)) * eps * eps);
  }
  return out;
}

double theta_zero_limit(int s) {
  if (s < 1) throw std::domain_error("theta_zero_limit: s must be >= 1");
  // composite Gauss-Legendre over [0, 12]; integrand u^{2s+1} e^{-u^2}
  GaussLegendreRule gl = gauss_legendre(24);
  NeumaierSum acc;
  const int panels = 24;
  const double hi = 12.0;
  for (int pnl = 0; pnl < panels; ++pnl) {
    double a = hi * pnl / panels, b = hi * (pnl + 1) / panels;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      double u = 0.5 * (b - a) * gl.nodes[i] + 0.5 * (a + b);
      acc.add(0.5 * (b - a) * gl.weights[i] * std::pow(u, 2 * s + 1) * std::exp(-u * u));
    }
  }
  return acc.value() / (2.0 * kPi);
}

std::pair<int, int> frame_j_range(const ZonalMixture& F, const FilterParams& base,
                                  double leak_tol) {
  base.validate();
  if (F.terms.empty()) throw std::domain_error("frame_j_range: empty mixture");
  WeightParams w{base.s, base.weight};
  std::map<int, double> norms = degree_norms(F);
  double full = 0.0;
  for (auto& [l, n2] : norms)
    full += n2 * level_sum(base.s, base.B, series_degree_arg(base.series, l));
  for (int j_max = 4;; ++j_max) {
    double covered = 0.0;
    for (auto& [l, n2] : norms) {
      NeumaierSum acc;
      for (int j = 0; j <= j_max; ++j) {
        double f = weight_value(w, base.B, j, series_degree_arg(base.series, l));
        acc.add(f * f);
      }
      covered += n2 * acc.value();
    }
    if (full - covered <= leak_tol * full) return {0, j_max};
    if (j_max > 10'000) throw std::domain_error("frame_j_range: no converging range");
  }
}

FrameReport frame_energy_report(const ZonalMixture& F, const FilterParams& base,
                                int j_min, int j_max, const FrameOptions& options) {
  base.validate();
  if (F.terms.empty()) throw std::domain_error("frame_energy_report: empty mixture");
  if (j_min < 0 || j_max < j_min)
    throw std::domain_error("frame_energy_report: bad j range");

  FrameReport rep;
  rep.B = base.B;
  rep.s = base.s;
  rep.j_min = j_min;
  rep.j_max = j_max;
  rep.options = options;
  for (const ZonalTerm& t : F.terms) rep.mixture.push_back({t.degree, t.coeff});
  rep.norm_squared = norm_squared(F);

  WeightParams w{base.s, base.weight};
  std::map<int, double> norms = degree_norms(F);

  // leakage of the weight energy outside the range
  double full = 0.0, covered = 0.0;
  for (auto& [l, n2] : norms) {
    double ls = level_sum(base.s, base.B, series_degree_arg(base.series, l));
    NeumaierSum acc;
    for (int j = j_min; j <= j_max; ++j) {
      double f = weight_value(w, base.B, j, series_degree_arg(base.series, l));
      acc.add(f * f);
    }
    full += n2 * ls;
    covered += n2 * acc.value();
  }
  rep.leakage = (full - covered) / full;
  if (!(rep.leakage <= kThresholds.frame_leak))
    throw std::invalid_argument("frame_energy_report: j range leaks " +
                                std::to_string(rep.leakage) +
                                " of the weight energy (limit 1e-10)");

  // bracket over the degrees present
  rep.bracket_lo = INFINITY;
  rep.bracket_hi = 0.0;
  for (auto& [l, n2] : norms) {
    double ls = level_sum(base.s, base.B, series_degree_arg(base.series, l));
    rep.bracket_lo = std::fmin(rep.bracket_lo, ls);
    rep.bracket_hi = std::fmax(rep.bracket_hi, ls);
  }

  NeumaierSum total, exact_total;
  for (int j = j_min; j <= j_max; ++j) {
    // per-term weights at this level
    std::vector<double> fw(F.terms.size());
    for (std::size_t i = 0; i < F.terms.size(); ++i)
      fw[i] = weight_value(w, base.B, j,
                           series_degree_arg(base.series, F.terms[i].degree));

    // exact (infinite-resolution) level energy: same pairing as the norm
    double e_exact = 0.0;
    for (std::size_t a = 0; a < F.terms.size(); ++a)
      for (std::size_t b = 0; b < F.terms.size(); ++b) {
        if (F.terms[a].degree != F.terms[b].degree) continue;
        e_exact += fw[a] * fw[b] * F.terms[a].coeff * F.terms[b].coeff *
                   (2.0 * F.terms[a].degree + 1.0) * kInvFourPi *
                   legendre(F.terms[a].degree, dot(F.terms[a].center, F.terms[b].center));
      }
    exact_total.add(e_exact);

    RingScheme scheme = make_ring_scheme(base.B, j, options.finesse);
    std::size_t n_cells = scheme.cell_count();
    FrameReport::Level lvl;
    lvl.j = j;
    lvl.cells = n_cells;
    lvl.pixelized = n_cells <= options.max_cells_per_level;
    if (!lvl.pixelized) {
      lvl.energy = e_exact;
    } else {
      // beta_jk = sqrt(lambda) sum_i c_i fw_i ((2l+1)/4pi) P_l(<xi, z_i>),
      // accumulated ring-parallel with per-ring slots for determinism
      std::vector<double> ring_energy(scheme.n_rings);
      parallel_for(scheme.n_rings, [&](std::size_t r) {
        RingScheme::Ring ring = scheme.ring(static_cast<int>(r));
        NeumaierSum acc;
        double ct = std::cos(ring.theta_mid), st = std::sin(ring.theta_mid);
        for (int m = 0; m < ring.cells; ++m) {
          double phi = (m + 0.5) * 2.0 * kPi / ring.cells;
          UnitVector xi{st * std::cos(phi), st * std::sin(phi), ct};
          double val = 0.0;
          for (std::size_t i = 0; i < F.terms.size(); ++i) {
            const ZonalTerm& t = F.terms[i];
            val += t.coeff * fw[i] * (2.0 * t.degree + 1.0) * kInvFourPi *
                   legendre(t.degree, dot(xi, t.center));
          }
          acc.add(val * val);
        }
        ring_energy[r] = ring.cell_area * acc.value();
      });
      NeumaierSum e;
      for (double re : ring_energy) e.add(re);
      lvl.energy = e.value();
    }
    total.add(lvl.energy);
    rep.levels.push_back(lvl);
  }

  rep.total = total.value();
  rep.exact_total = exact_total.value();
  rep.exact_rhs = covered;  // same degree-wise sums, opposite association order
  rep.exact_rel_dev = std::fabs(rep.exact_total - rep.exact_rhs) / rep.exact_rhs;
  rep.ratio = rep.total / rep.norm_squared;
  rep.pass = rep.ratio >= rep.bracket_lo * (1.0 - kThresholds.frame_slack) &&
             rep.ratio <= rep.bracket_hi * (1.0 + kThresholds.frame_slack) &&
             rep.exact_rel_dev <= kThresholds.frame_exact_rel;
  return rep;
}

double laplacian_relation_check(double B, int j, int s, int l_max, WeightVariant variant) {
  if (variant != WeightVariant::ExactLaplacian)
    throw std::domain_error(
        "laplacian_relation_check: the recursion is exact only for the "
        "ExactLaplacian weight");
  if (s < 1) throw std::domain_error("laplacian_relation_check: s must be >= 1");
  if (!(B > 1.0)) throw std::domain_error("laplacian_relation_check: B must be > 1");
  WeightParams w1{1, WeightVariant::ExactLaplacian};
  WeightParams ws{s, WeightVariant::ExactLaplacian};
  double scale = std::pow(B, -2 * j);
  double worst = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    double target = weight_value(ws, B, j, l);
    double lhs = weight_value(w1, B, j, l);
    double mult = l * (l + 1.0) * scale;
    for (int k = 1; k < s; ++k) lhs *= mult;
    if (target == 0.0 && lhs == 0.0) continue;
    worst = std::fmax(worst, std::fabs(lhs - target) / std::fabs(target));
  }
  return worst;
}

LpReport lp_scaling_report(const FilterParams& base, int j_min, int j_max,
                           std::span<const double> p_list) {
  base.validate();
  if (j_min < 0 || j_max < j_min) throw std::domain_error("lp_scaling_report: bad j range");
  LpReport rep;
  rep.B = base.B;
  rep.s = base.s;
  rep.j_min = j_min;
  rep.j_max = j_max;

  const int panels = 64, nodes_per_panel = 32;
  GaussLegendreRule gl = gauss_legendre(nodes_per_panel);
  std::vector<double> thetas, qweights;
  for (int pnl = 0; pnl < panels; ++pnl) {
    double a = kPi * pnl / panels, b = kPi * (pnl + 1) / panels;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      thetas.push_back(0.5 * (b - a) * gl.nodes[i] + 0.5 * (a + b));
      qweights.push_back(0.5 * (b - a) * gl.weights[i]);
    }
  }

  rep.l2_closed_rel = 0.0;
  std::map<double, std::vector<double>> log_norms;  // p -> per-j log norm
  for (int j = j_min; j <= j_max; ++j) {
    FilterParams params = base;
    params.j = j;
    double lambda = make_ring_scheme(base.B, j).ring(0).cell_area;  // polar cell
    ProfileEvaluator eval(params);
    std::vector<double> vals(thetas.size());
    parallel_for(thetas.size(), [&](std::size_t i) { vals[i] = eval(thetas[i]); });

    for (double p : p_list) {
      double norm;
      if (std::isinf(p)) {
        // grid max, refined around the best point
        std::size_t best = 0;
        for (std::size_t i = 0; i < vals.size(); ++i)
          if (std::fabs(vals[i]) > std::fabs(vals[best])) best = i;
        double lo = best == 0 ? 0.0 : thetas[best - 1];
        double hi = best + 1 == thetas.size() ? kPi : thetas[best + 1];
        double peak = std::fabs(vals[best]);
        for (int round = 0; round < 3; ++round) {
          double step = (hi - lo) / 32.0;
          double arg = lo;
          for (int i = 0; i <= 32; ++i) {
            double th = lo + step * i;
            double v = std::fabs(eval(th));
            if (v > peak) {
              peak = v;
              arg = th;
            }
          }
          lo = std::fmax(0.0, arg - step);
          hi = std::fmin(kPi, arg + step);
        }
        norm = std::sqrt(lambda) * peak;
      } else {
        if (!(p >= 1.0)) throw std::domain_error("lp_scaling_report: p must be >= 1");
        NeumaierSum acc;
        for (std::size_t i = 0; i < vals.size(); ++i)
          acc.add(qweights[i] * std::pow(std::fabs(vals[i]), p) * std::sin(thetas[i]));
        norm = std::pow(lambda, p / 2.0) * 2.0 * kPi * acc.value();
        norm = std::pow(norm, 1.0 / p);
      }
      rep.entries.push_back({j, p, norm});
      log_norms[p].push_back(std::log(norm));
    }

    // closed-form L2 from the harmonic coefficients
    WeightParams w{base.s, base.weight};
    NeumaierSum closed;
    for (int l = 0; l <= eval.l_max(); ++l) {
      double f = weight_value(w, base.B, j, series_degree_arg(base.series, l));
      closed.add(f * f * (2.0 * l + 1.0) * kInvFourPi);
    }
    double closed_sq = lambda * closed.value();
    NeumaierSum quad;
    for (std::size_t i = 0; i < vals.size(); ++i)
      quad.add(qweights[i] * vals[i] * vals[i] * std::sin(thetas[i]));
    double quad_sq = lambda * 2.0 * kPi * quad.value();
    rep.l2_closed_rel =
        std::fmax(rep.l2_closed_rel, std::fabs(quad_sq - closed_sq) / closed_sq);
  }

  // least-squares slope of log norm against j log B
  bool slopes_ok = true;
  for (double p : p_list) {
    const std::vector<double>& y = log_norms[p];
    double n = static_cast<double>(y.size());
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      xbar += (j_min + static_cast<double>(i)) * std::log(rep.B);
      ybar += y[i];
    }
    xbar /= n;
    ybar /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      double x = (j_min + static_cast<double>(i)) * std::log(rep.B) - xbar;
      sxy += x * (y[i] - ybar);
      sxx += x * x;
    }
    double fitted = sxy / sxx;
    double target = std::isinf(p) ? 1.0 : 2.0 * (0.5 - 1.0 / p);
    rep.slopes.push_back({p, fitted, target});
    slopes_ok = slopes_ok && std::fabs(fitted - target) <= kThresholds.slope_tol;
  }
  rep.pass = slopes_ok && rep.l2_closed_rel <= kThresholds.l2_closed_rel;
  return rep;
}

}  // namespace mexlet
