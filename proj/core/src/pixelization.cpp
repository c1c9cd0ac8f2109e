#include "mexlet/pixelization.hpp"

#include <cmath>
#include <stdexcept>

#include "mexlet/errors.hpp"

namespace mexlet {

namespace {
constexpr double kPi = 3.14159265358979324;
constexpr double kTwoPi = 6.28318530717958648;
constexpr std::size_t kMaxCells = 10'000'000;
}  // namespace

RingScheme::Ring RingScheme::ring(int r) const {
  Ring out;
  out.theta_lo = ring_width * r;
  out.theta_hi = r + 1 == n_rings ? kPi : ring_width * (r + 1);
  out.theta_mid = 0.5 * (out.theta_lo + out.theta_hi);
  out.cells = std::max(1, static_cast<int>(std::lround(kTwoPi * std::sin(out.theta_mid) / ring_width)));
  double zone = kTwoPi * (std::cos(out.theta_lo) - std::cos(out.theta_hi));
  out.cell_area = zone / out.cells;
  // widest parallel arc inside the band
  double smax = (out.theta_lo < kPi / 2 && out.theta_hi > kPi / 2)
                    ? 1.0
                    : std::fmax(std::sin(out.theta_lo), std::sin(out.theta_hi));
  out.cell_diam = std::fmin(kPi, (out.theta_hi - out.theta_lo) + kTwoPi / out.cells * smax);
  return out;
}

std::size_t RingScheme::cell_count() const {
  std::size_t n = 0;
  for (int r = 0; r < n_rings; ++r) n += static_cast<std::size_t>(ring(r).cells);
  return n;
}

RingScheme make_ring_scheme(double B, int j, int finesse) {
  if (!(B > 1.0)) throw std::domain_error("make_ring_scheme: B must be > 1");
  if (j < 0) throw std::domain_error("make_ring_scheme: j must be >= 0");
  if (finesse < 1) throw std::domain_error("make_ring_scheme: finesse must be >= 1");
  RingScheme s;
  s.B = B;
  s.j = j;
  s.finesse = finesse;
  double target = kPi * std::pow(B, j) * finesse / 2.0;
  if (target > 1.0e8) throw resource_error("make_ring_scheme: ring count out of range");
  s.n_rings = static_cast<int>(std::ceil(target));
  s.ring_width = kPi / s.n_rings;
  return s;
}

Pixelization build_partition(double B, int j, int finesse) {
  Pixelization p;
  p.B = B;
  p.j = j;
  p.scheme = make_ring_scheme(B, j, finesse);
  std::size_t n = p.scheme.cell_count();
  if (n > kMaxCells)
    throw resource_error("build_partition: " + std::to_string(n) + " cells exceeds cap 1e7");
  p.cells.reserve(n);
  p.ring_offset.reserve(p.scheme.n_rings + 1);
  for (int r = 0; r < p.scheme.n_rings; ++r) {
    p.ring_offset.push_back(p.cells.size());
    RingScheme::Ring ring = p.scheme.ring(r);
    for (int m = 0; m < ring.cells; ++m) {
      double phi = (m + 0.5) * kTwoPi / ring.cells;
      p.cells.push_back({UnitVector::from_spherical(ring.theta_mid, phi),
                         ring.cell_area, ring.cell_diam});
    }
  }
  p.ring_offset.push_back(p.cells.size());
  return p;
}

std::size_t Pixelization::locate(const UnitVector& v) const {
  double theta = v.colatitude();
  int r = static_cast<int>(theta / scheme.ring_width);
  if (r >= scheme.n_rings) r = scheme.n_rings - 1;
  RingScheme::Ring ring = scheme.ring(r);
  double phi = v.azimuth();
  int m = static_cast<int>(phi / (kTwoPi / ring.cells));
  if (m >= ring.cells) m = ring.cells - 1;
  return ring_offset[r] + static_cast<std::size_t>(m);
}

bool Pixelization::contains(std::size_t k, const UnitVector& v) const {
  // ring via offset table (rings are few; binary search)
  std::size_t lo = 0, hi = ring_offset.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (ring_offset[mid] <= k)
      lo = mid;
    else
      hi = mid;
  }
  int r = static_cast<int>(lo);
  RingScheme::Ring ring = scheme.ring(r);
  double theta = v.colatitude();
  bool in_band = theta >= ring.theta_lo &&
                 (r + 1 == scheme.n_rings ? theta <= ring.theta_hi : theta < ring.theta_hi);
  if (!in_band) return false;
  double width = kTwoPi / ring.cells;
  int m = static_cast<int>(k - ring_offset[r]);
  double phi = v.azimuth();
  return phi >= m * width && (m + 1 == ring.cells ? phi <= kTwoPi : phi < (m + 1) * width);
}

void for_each_cell(const RingScheme& scheme,
                   const std::function<void(const UnitVector&, double)>& f) {
  for (int r = 0; r < scheme.n_rings; ++r) {
    RingScheme::Ring ring = scheme.ring(r);
    for (int m = 0; m < ring.cells; ++m) {
      double phi = (m + 0.5) * kTwoPi / ring.cells;
      f(UnitVector::from_spherical(ring.theta_mid, phi), ring.cell_area);
    }
  }
}

}  // namespace mexlet
