#include "mexlet/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace mexlet;

namespace {

// explicit closed forms through degree 4
double legendre_closed(int l, double x) {
  switch (l) {
    case 0: return 1.0;
    case 1: return x;
    case 2: return 0.5 * (3 * x * x - 1);
    case 3: return 0.5 * (5 * x * x * x - 3 * x);
    default: return 0.125 * (35 * std::pow(x, 4) - 30 * x * x + 3);
  }
}

// odd-degree expansion H_n(x) = n! sum_r (-1)^{(n-1)/2-r} (2x)^{2r+1} /
// ((2r+1)! ((n-1)/2-r)!), used as an independent oracle for the recurrence
double hermite_odd_sum(int n, double x) {
  int half = (n - 1) / 2;
  double sum = 0.0;
  for (int r = 0; r <= half; ++r) {
    double sign = (half - r) % 2 == 0 ? 1.0 : -1.0;
    sum += sign * std::pow(2.0 * x, 2 * r + 1) /
           (factorial(2 * r + 1) * factorial(half - r));
  }
  return factorial(n) * sum;
}

}  // namespace

TEST_CASE("legendre point values") {
  CHECK(legendre(0, 0.3) == 1.0);
  CHECK(legendre(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  for (int l : {1, 5, 50}) CHECK(legendre(l, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("legendre recurrence against closed forms, l <= 4") {
  for (int l = 0; l <= 4; ++l)
    for (int i = 0; i < 100; ++i) {
      double x = -1.0 + 2.0 * i / 99.0;
      CHECK(legendre(l, x) == doctest::Approx(legendre_closed(l, x)).epsilon(1e-14));
    }
}

TEST_CASE("legendre stays bounded by 1 at high degree") {
  for (int l : {10, 137, 4096, 100000})
    for (double x : {-0.999, -0.5, 0.0, 0.317, 0.92, 1.0})
      CHECK(std::fabs(legendre(l, x)) <= 1.0 + 1e-12);
  // no overflow out to the documented degree cap
  CHECK(std::fabs(legendre(10'000'000, 0.7)) <= 1.0);
}

TEST_CASE("legendre domain handling") {
  CHECK_THROWS_AS(legendre(3, 1.1), std::domain_error);
  CHECK_THROWS_AS(legendre(-1, 0.0), std::domain_error);
  // endpoint roundoff is clamped
  CHECK(legendre(7, 1.0 + 1e-13) == doctest::Approx(1.0));
}

TEST_CASE("hermite point values") {
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0));
  CHECK(hermite(3, 2.0) == doctest::Approx(40.0));
  CHECK(hermite(0, 5.0) == 1.0);
}

TEST_CASE("hermite recurrence agrees with the odd-degree sum formula") {
  for (int n = 1; n <= 15; n += 2)
    for (double x = -20.0; x <= 20.0; x += 1.3) {
      double ref = hermite_odd_sum(n, x);
      if (ref == 0.0)
        CHECK(std::fabs(hermite(n, x)) < 1e-10);
      else
        CHECK(hermite(n, x) == doctest::Approx(ref).epsilon(1e-10));
    }
  // frozen spot value
  CHECK(hermite(7, 1.3) == doctest::Approx(hermite_odd_sum(7, 1.3)).epsilon(1e-12));
}

TEST_CASE("hermite growth envelope |H_n| <= C'_n max(1,|x|)^n for odd n") {
  for (int n = 1; n <= 15; n += 2) {
    double c = hermite_envelope_constant(n);
    for (double x = -20.0; x <= 20.0; x += 0.37) {
      double bound = c * std::pow(std::fmax(1.0, std::fabs(x)), n);
      CHECK(std::fabs(hermite(n, x)) <= bound * (1.0 + 1e-12));
    }
  }
  CHECK_THROWS_AS(hermite_envelope_constant(4), std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(12) == 479001600.0);
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}
