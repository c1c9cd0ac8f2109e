#ifndef MEXLET_SUMMATION_HPP
#define MEXLET_SUMMATION_HPP

#include <cmath>

namespace mexlet {

// Kahan-Babuska-Neumaier compensated accumulator.  Error is u*|sum| plus an
// O(n*u^2) term in the absolute column sums, i.e. exact for all practical
// purposes when the terms themselves are exact.
class NeumaierSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mexlet

#endif  // MEXLET_SUMMATION_HPP
