#ifndef MEXLET_DD_HPP
#define MEXLET_DD_HPP

#include <cmath>
#include <limits>

// Double-double arithmetic built from error-free transforms (TwoSum /
// fma-based TwoProd).  A dd value represents hi + lo with |lo| <= ulp(hi)/2,
// giving ~31 significant decimal digits.  This is the working precision of
// the kernel series: the needlet tail checks multiply by e^{+(theta/2eps)^2},
// which amplifies any term-level rounding far beyond what 64-bit terms can
// sustain (see kernel.hpp).
//
// All operations assume round-to-nearest IEEE doubles and no unsafe FP
// optimization of this translation unit.

namespace mexlet {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// requires |a| >= |b|
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(const dd& x, const dd& y) {
  dd s = two_sum(x.hi, y.hi);
  double e = s.lo + x.lo + y.lo;
  return quick_two_sum(s.hi, e);
}

inline dd dd_add(const dd& x, double y) {
  dd s = two_sum(x.hi, y);
  double e = s.lo + x.lo;
  return quick_two_sum(s.hi, e);
}

inline dd dd_neg(const dd& x) { return {-x.hi, -x.lo}; }

inline dd dd_sub(const dd& x, const dd& y) { return dd_add(x, dd_neg(y)); }

inline dd dd_mul(const dd& x, const dd& y) {
  dd p = two_prod(x.hi, y.hi);
  double e = p.lo + x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, e);
}

inline dd dd_mul(const dd& x, double y) {
  dd p = two_prod(x.hi, y);
  double e = p.lo + x.lo * y;
  return quick_two_sum(p.hi, e);
}

inline dd dd_div(const dd& x, double y) {
  double q0 = x.hi / y;
  dd p = two_prod(q0, y);
  dd r = dd_add(dd_sub(x, p), 0.0);
  double q1 = (r.hi + r.lo) / y;
  return quick_two_sum(q0, q1);
}

inline dd dd_div(const dd& x, const dd& y) {
  double q0 = x.hi / y.hi;
  dd r = dd_sub(x, dd_mul(y, q0));
  double q1 = r.hi / y.hi;
  r = dd_sub(r, dd_mul(y, q1));
  double q2 = r.hi / y.hi;
  dd q = quick_two_sum(q0, q1);
  return dd_add(q, q2);
}

inline double to_double(const dd& x) { return x.hi + x.lo; }

inline dd dd_ldexp(const dd& x, int n) {
  return {std::ldexp(x.hi, n), std::ldexp(x.lo, n)};
}

// x^n by binary powering, n >= 0
inline dd dd_pow_int(dd x, int n) {
  dd r{1.0};
  while (n > 0) {
    if (n & 1) r = dd_mul(r, x);
    x = dd_mul(x, x);
    n >>= 1;
  }
  return r;
}

namespace detail {
inline constexpr dd kLn2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd kPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd kTwoPi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd kHalfPi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr dd kSqrtPi{1.772453850905516, -7.666586499825799e-17};
inline constexpr dd kInvTwoPi{0.15915494309189535, -9.839338337591243e-18};
inline constexpr dd kInvFourPi{0.07957747154594767, -4.9196691687956215e-18};
}  // namespace detail

inline dd dd_pi() { return detail::kPi; }
inline dd dd_two_pi() { return detail::kTwoPi; }
inline dd dd_sqrt_pi() { return detail::kSqrtPi; }
inline dd dd_inv_two_pi() { return detail::kInvTwoPi; }
inline dd dd_inv_four_pi() { return detail::kInvFourPi; }

// exp(x) with ~1e-31 relative error; returns 0 below the double underflow
// range (images in the Poisson sums hit e^{-1900} and smaller).
inline dd dd_exp(const dd& x) {
  if (x.hi < -745.0) return {0.0, 0.0};
  if (x.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
  double k = std::round(x.hi / detail::kLn2.hi);
  dd r = dd_sub(x, dd_mul(detail::kLn2, k));
  // |r| <= ln2/2; Taylor sum
  dd term{1.0};
  dd sum{1.0};
  for (int n = 1; n < 40; ++n) {
    term = dd_div(dd_mul(term, r), static_cast<double>(n));
    sum = dd_add(sum, term);
    if (std::fabs(term.hi) < 1.0e-35 * std::fabs(sum.hi)) break;
  }
  return dd_ldexp(sum, static_cast<int>(k));
}

namespace detail {
// sin/cos of |r| <= pi/4 by Taylor
inline dd sin_taylor(const dd& r) {
  dd r2 = dd_mul(r, r);
  dd term = r;
  dd sum = r;
  for (int n = 1; n < 24; ++n) {
    term = dd_mul(term, r2);
    term = dd_div(term, -static_cast<double>((2 * n) * (2 * n + 1)));
    sum = dd_add(sum, term);
    if (std::fabs(term.hi) < 1.0e-35 * (std::fabs(sum.hi) + 1e-300)) break;
  }
  return sum;
}

inline dd cos_taylor(const dd& r) {
  dd r2 = dd_mul(r, r);
  dd term{1.0};
  dd sum{1.0};
  for (int n = 1; n < 24; ++n) {
    term = dd_mul(term, r2);
    term = dd_div(term, -static_cast<double>((2 * n - 1) * (2 * n)));
    sum = dd_add(sum, term);
    if (std::fabs(term.hi) < 1.0e-35 * std::fabs(sum.hi)) break;
  }
  return sum;
}
}  // namespace detail

// sin and cos of x for moderate |x| (reduction by multiples of pi/2 in dd;
// adequate for |x| up to ~1e6 which covers every phase used here).
inline void dd_sincos(const dd& x, dd& s, dd& c) {
  double k = std::round(to_double(x) / detail::kHalfPi.hi);
  dd r = dd_sub(x, dd_mul(detail::kHalfPi, k));
  dd sr = detail::sin_taylor(r);
  dd cr = detail::cos_taylor(r);
  switch (static_cast<long long>(k) & 3LL) {
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = dd_neg(sr); break;
    case 2: s = dd_neg(sr); c = dd_neg(cr); break;
    default: s = dd_neg(cr); c = sr; break;
  }
}

}  // namespace mexlet

#endif  // MEXLET_DD_HPP
