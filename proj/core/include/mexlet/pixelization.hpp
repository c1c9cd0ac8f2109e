#ifndef MEXLET_PIXELIZATION_HPP
#define MEXLET_PIXELIZATION_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "mexlet/geometry.hpp"

namespace mexlet {

// Iso-latitude equal-area ring layout: ceil(pi B^j finesse / 2) bands of equal
// colatitude width, each band split into near-square cells of exactly equal
// area (spherical zone area / cell count).  Computed on demand so level
// energies can stream over very fine levels without materialising cells.
struct RingScheme {
  double B = 2.0;
  int j = 0;
  int finesse = 1;
  int n_rings = 0;
  double ring_width = 0.0;  // pi / n_rings

  struct Ring {
    double theta_lo, theta_hi, theta_mid;
    int cells;          // azimuthal split M_r
    double cell_area;   // zone area / M_r, exact by construction
    double cell_diam;   // band width + widest azimuthal arc, clamped to pi
  };

  Ring ring(int r) const;
  std::size_t cell_count() const;
};

RingScheme make_ring_scheme(double B, int j, int finesse = 1);

struct PixelCell {
  UnitVector center;
  double area = 0.0;
  double diameter = 0.0;
};

struct Pixelization {
  double B = 2.0;
  int j = 0;
  RingScheme scheme;
  std::vector<PixelCell> cells;
  std::vector<std::size_t> ring_offset;  // ring -> first cell index

  std::size_t size() const { return cells.size(); }

  // index of the unique cell whose half-open (theta, phi) box contains p
  std::size_t locate(const UnitVector& p) const;

  // geometric membership test against cell k's box
  bool contains(std::size_t k, const UnitVector& p) const;
};

// Throws resource_error above 1e7 cells.  j >= 0 (coarser levels would need
// cells wider than a hemisphere, which the ring layout cannot represent).
Pixelization build_partition(double B, int j, int finesse = 1);

// Streams (center, area) of every cell at one level without materialising the
// cell vector; used by the frame-energy report at fine levels.
void for_each_cell(const RingScheme& scheme,
                   const std::function<void(const UnitVector&, double)>& f);

}  // namespace mexlet

#endif  // MEXLET_PIXELIZATION_HPP
