#ifndef MEXLET_SPECIAL_FUNCTIONS_HPP
#define MEXLET_SPECIAL_FUNCTIONS_HPP

namespace mexlet {

// Legendre polynomial P_l(x) via the three-term recurrence
//   (l+1) P_{l+1} = (2l+1) x P_l - l P_{l-1}.
// |x| may exceed 1 by at most 1e-12 (endpoint roundoff); it is clamped.
// Throws std::domain_error beyond that.  Safe for l up to 1e7.
double legendre(int l, double x);

// Incremental evaluation of P_0(x), P_1(x), ... for series accumulation.
class LegendreRecurrence {
 public:
  explicit LegendreRecurrence(double x) : x_(x) {}

  // value for the current degree, then advance
  double next() {
    double v;
    if (l_ == 0) {
      v = 1.0;
    } else if (l_ == 1) {
      v = x_;
      p_prev_ = 1.0;
      p_ = x_;
    } else {
      v = ((2 * l_ - 1) * x_ * p_ - (l_ - 1) * p_prev_) / l_;
      p_prev_ = p_;
      p_ = v;
    }
    ++l_;
    return v;
  }

 private:
  double x_;
  long l_ = 0;
  double p_prev_ = 1.0;
  double p_ = 1.0;
};

// Physicists' Hermite polynomial H_n(x):
//   H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - 2n H_{n-1}.
// Overflows double roughly when n*log2(2*max(|x|, sqrt(n))) exceeds ~1020;
// for the degrees used here (n <= 2s+1 <= 9) any |x| < 1e150 is safe.
double hermite(int n, double x);

// Envelope constant C'_n for odd n:
//   C'_n = n! * sum_k 2^{2k+1} / ((2k+1)! ((n-1)/2 - k)!),
// giving |H_n(x)| <= C'_n max(1, |x|)^n.
double hermite_envelope_constant(int n);

// (m)! as double, m <= 170
double factorial(int m);

}  // namespace mexlet

#endif  // MEXLET_SPECIAL_FUNCTIONS_HPP
