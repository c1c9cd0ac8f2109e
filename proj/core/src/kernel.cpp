#include "mexlet/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mexlet/parallel.hpp"
#include "mexlet/special_functions.hpp"
#include "mexlet/summation.hpp"

namespace mexlet {

namespace {

// degree argument and coefficient of term l for the series variant
inline double degree_arg(SeriesVariant v, int l) {
  return v == SeriesVariant::HalfInteger ? l + 0.5 : static_cast<double>(l);
}

inline double coefficient(SeriesVariant v, int l) {
  return v == SeriesVariant::HalfInteger ? l + 0.5 : 2.0 * l + 1.0;
}

// weight-side term magnitude used for truncation scans (64-bit is plenty for
// locating the 1e-30 cut)
double term_envelope(const FilterParams& p, int l) {
  WeightParams w{p.s, p.weight};
  return weight_value(w, p.B, p.j, degree_arg(p.series, l)) * coefficient(p.series, l);
}

// f_s at real degree in double-double: SquaredArgument x^{2s} e^{-x^2} with
// x = eps*deg, ExactLaplacian y^s e^{-y} with y = deg(deg+1) eps^2
dd dd_weight(const FilterParams& p, double deg) {
  dd e{p.eps()};
  if (p.weight == WeightVariant::SquaredArgument) {
    dd x = dd_mul(e, deg);
    dd x2 = dd_mul(x, x);
    if (x2.hi > 745.0) return {0.0, 0.0};
    return dd_mul(dd_pow_int(x, 2 * p.s), dd_exp(dd_neg(x2)));
  }
  dd y = dd_mul(dd_mul(e, e), deg * (deg + 1.0));
  if (y.hi > 745.0) return {0.0, 0.0};
  return dd_mul(dd_pow_int(y, p.s), dd_exp(dd_neg(y)));
}

dd dd_hermite(int n, const dd& x) {
  dd h0{1.0};
  if (n == 0) return h0;
  dd h1 = dd_mul(x, 2.0);
  for (int k = 1; k < n; ++k) {
    dd h2 = dd_sub(dd_mul(dd_mul(x, h1), 2.0), dd_mul(h0, 2.0 * k));
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

constexpr long kMaxScan = 10'000'000;

}  // namespace

int truncation_degree(const FilterParams& params, double tail_tol) {
  params.validate();
  if (!(tail_tol > 0.0) || !(tail_tol < 1.0))
    throw std::domain_error("truncation_degree: tail_tol must be in (0,1)");
  double peak = 0.0;
  long peak_l = 0;
  for (long l = 0; l < kMaxScan; ++l) {
    double t = term_envelope(params, static_cast<int>(l));
    if (t > peak) {
      peak = t;
      peak_l = l;
    }
    if (l > peak_l && t < tail_tol * peak) return static_cast<int>(l);
  }
  throw std::domain_error("truncation_degree: no cut below l = 1e7");
}

void ProfileEvaluator::build_weights(const FilterParams& params) {
  weights_.resize(static_cast<std::size_t>(l_max_) + 1);
  if (mode_ == Summation::Compensated) {
    for (int l = 0; l <= l_max_; ++l)
      weights_[l] = dd_mul(dd_weight(params, degree_arg(params.series, l)),
                           coefficient(params.series, l));
  } else {
    WeightParams w{params.s, params.weight};
    for (int l = 0; l <= l_max_; ++l)
      weights_[l] = dd{weight_value(w, params.B, params.j, degree_arg(params.series, l)) *
                       coefficient(params.series, l)};
  }
  norm_ = params.series == SeriesVariant::HalfInteger ? dd_inv_two_pi() : dd_inv_four_pi();
}

ProfileEvaluator::ProfileEvaluator(const FilterParams& params, double tail_tol,
                                   Summation mode)
    : params_(params), l_max_(truncation_degree(params, tail_tol)), mode_(mode) {
  build_weights(params);
}

ProfileEvaluator::ProfileEvaluator(const FilterParams& params, int l_max, Summation mode)
    : params_(params), l_max_(l_max), mode_(mode) {
  params_.validate();
  if (l_max_ < 0 || l_max_ > kMaxScan)
    throw std::domain_error("ProfileEvaluator: bad l_max");
  build_weights(params);
}

double ProfileEvaluator::operator()(double theta) const {
  if (!(theta >= 0.0) || !(theta <= 3.14159265358979324))
    throw std::domain_error("needlet_profile: theta must be in [0, pi]");
  double x = std::cos(theta);
  if (mode_ == Summation::Plain) {
    LegendreRecurrence rec(x);
    double acc = 0.0;
    for (int l = 0; l <= l_max_; ++l) acc += weights_[l].hi * rec.next();
    return acc * norm_.hi;
  }
  dd xd{x};
  dd p_prev{1.0};
  dd p{1.0};
  dd acc{0.0};
  for (int l = 0; l <= l_max_; ++l) {
    if (l == 1) {
      p = xd;
    } else if (l > 1) {
      dd t = dd_mul(dd_mul(xd, p), 2.0 * l - 1.0);
      t = dd_add(t, dd_mul(p_prev, -(l - 1.0)));
      t = dd_div(t, static_cast<double>(l));
      p_prev = p;
      p = t;
    }
    acc = dd_add(acc, dd_mul(weights_[l], p));
  }
  return to_double(dd_mul(acc, norm_));
}

double needlet_profile(const FilterParams& params, double theta, Summation mode) {
  return ProfileEvaluator(params, 1e-30, mode)(theta);
}

double kappa_direct(double eps, int s, double phi, Summation mode) {
  if (!(eps > 0.0)) throw std::domain_error("kappa_direct: eps must be > 0");
  if (s < 1) throw std::domain_error("kappa_direct: s must be >= 1");
  if (!(phi >= 0.0) || !(phi <= 3.14159265358979324))
    throw std::domain_error("kappa_direct: phi must be in [0, pi]");
  // truncation: same envelope cut as the profile series
  double peak = 0.0;
  long peak_l = 0;
  int l_max = -1;
  for (long l = 0; l < kMaxScan; ++l) {
    double x = eps * (l + 0.5);
    double t = weight_profile(s, x) * (l + 0.5);
    if (t > peak) {
      peak = t;
      peak_l = l;
    }
    if (l > peak_l && t < 1e-30 * peak) {
      l_max = static_cast<int>(l);
      break;
    }
  }
  if (l_max < 0) throw std::domain_error("kappa_direct: no truncation below 1e7");

  if (mode == Summation::Plain) {
    double acc = 0.0;
    for (int l = 0; l <= l_max; ++l) {
      double u = l + 0.5;
      acc += weight_profile(s, eps * u) * u * std::sin(u * phi);
    }
    return acc;
  }

  dd eps_dd{eps};
  // sin((l+1/2) phi) by dd rotation: seed at phi/2, advance by phi
  dd sin_half, cos_half, sin_phi, cos_phi;
  dd_sincos(dd_div(dd{phi}, 2.0), sin_half, cos_half);
  dd_sincos(dd{phi}, sin_phi, cos_phi);
  dd sn = sin_half, cn = cos_half;
  dd acc{0.0};
  for (int l = 0; l <= l_max; ++l) {
    double u = l + 0.5;
    dd x = dd_mul(eps_dd, u);
    dd x2 = dd_mul(x, x);
    dd w = x2.hi > 745.0 ? dd{0.0}
                         : dd_mul(dd_mul(dd_pow_int(x, 2 * s), dd_exp(dd_neg(x2))), u);
    acc = dd_add(acc, dd_mul(w, sn));
    dd sn_next = dd_add(dd_mul(sn, cos_phi), dd_mul(cn, sin_phi));
    dd cn_next = dd_sub(dd_mul(cn, cos_phi), dd_mul(sn, sin_phi));
    sn = sn_next;
    cn = cn_next;
  }
  return to_double(acc);
}

double kappa_psf(double eps, int s, double phi, int nu_max) {
  if (!(eps > 0.0)) throw std::domain_error("kappa_psf: eps must be > 0");
  if (s < 1) throw std::domain_error("kappa_psf: s must be >= 1");
  if (!(phi > 0.0) || !(phi < 3.14159265358979324))
    throw std::domain_error("kappa_psf: phi must be in (0, pi)");
  if (nu_max < 1) throw std::domain_error("kappa_psf: nu_max must be >= 1");

  // K(phi) = 1/2 sum_nu (-1)^nu T(2 pi nu + phi),
  // T(w) = (-1)^s sqrt(pi) 2^{-(2s+1)} eps^{-2} H_{2s+1}(w/2eps) e^{-(w/2eps)^2}
  dd eps2 = dd_mul(dd{eps}, eps);
  dd scale = dd_div(dd_sqrt_pi(), std::ldexp(1.0, 2 * s + 1));
  scale = dd_div(scale, eps2);
  if (s % 2 == 1) scale = dd_neg(scale);
  dd twoeps = dd_mul(dd{eps}, 2.0);
  dd acc{0.0};
  for (int nu = -nu_max; nu <= nu_max; ++nu) {
    dd w = dd_add(dd_mul(dd_two_pi(), static_cast<double>(nu)), dd{phi});
    dd y = dd_div(w, twoeps);
    dd y2 = dd_mul(y, y);
    if (y2.hi > 745.0) continue;
    dd img = dd_mul(dd_hermite(2 * s + 1, y), dd_exp(dd_neg(y2)));
    if (nu & 1) img = dd_neg(img);
    acc = dd_add(acc, img);
  }
  return to_double(dd_mul(dd_mul(acc, scale), 0.5));
}

double fourier_weight_transform_magnitude(int s, double eps, double omega) {
  if (s < 0) throw std::domain_error("fourier transform: s must be >= 0");
  if (!(eps > 0.0)) throw std::domain_error("fourier transform: eps must be > 0");
  double y = omega / (2.0 * eps);
  double y2 = y * y;
  if (y2 > 745.0) return 0.0;
  return std::sqrt(3.14159265358979324) / (std::ldexp(1.0, 2 * s + 1) * eps * eps) *
         std::fabs(hermite(2 * s + 1, y)) * std::exp(-y2);
}

KernelProfile sample_profile(const FilterParams& params, std::span<const double> thetas,
                             Summation mode, double tail_tol) {
  for (std::size_t i = 0; i + 1 < thetas.size(); ++i)
    if (!(thetas[i] < thetas[i + 1]))
      throw std::domain_error("sample_profile: thetas must be strictly increasing");

  KernelProfile out;
  out.params = params;
  out.summation = mode;
  out.thetas.assign(thetas.begin(), thetas.end());
  out.values.resize(thetas.size());

  ProfileEvaluator eval(params, tail_tol, mode);
  out.l_max = eval.l_max();
  parallel_for(thetas.size(), [&](std::size_t i) { out.values[i] = eval(thetas[i]); });

  // truncation certificate on a spread of check points
  ProfileEvaluator doubled(params, 2 * eval.l_max(), mode);
  double vmax = 0.0;
  for (double v : out.values) vmax = std::max(vmax, std::fabs(v));
  double dev = 0.0;
  std::size_t n_checks = std::min<std::size_t>(thetas.size(), 32);
  if (vmax > 0.0 && n_checks > 0) {
    std::size_t stride = std::max<std::size_t>(thetas.size() / n_checks, 1);
    for (std::size_t i = 0; i < thetas.size(); i += stride)
      dev = std::max(dev, std::fabs(doubled(thetas[i]) - out.values[i]) / vmax);
  }
  out.truncation_deviation = dev;
  return out;
}

}  // namespace mexlet
