#ifndef OAMDIM_PLATE_HPP
#define OAMDIM_PLATE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "oamdim/angle.hpp"

namespace oamdim {

/// A pure phase plate whose phase delay is piecewise constant in the
/// azimuthal angle. Sector k spans [boundaries()[k], boundaries()[k+1]) and
/// carries phase phases()[k]; the last sector wraps around through 2*pi.
/// Plates are canonicalized on construction (phases reduced mod 2*pi,
/// zero-width sectors dropped, adjacent equal-phase sectors merged, a fully
/// uniform plate keeps a single boundary at 0) and immutable afterwards.
class SectorPlate {
 public:
  /// Build a plate from sector start angles and per-sector phases.
  /// Boundaries must be strictly increasing and lie in [0, 2*pi).
  static SectorPlate from_sectors(std::vector<double> boundaries_rad,
                                  std::vector<double> phases_rad);

  /// Plate with unit transmission everywhere.
  static SectorPlate uniform();

  /// Phase pi on [0, delta), phase 0 on the remainder. delta = 0 gives the
  /// uniform plate.
  static SectorPlate single_sector(Angle delta);

  /// 2N sectors alternatingly phase shifted by pi, starting with pi at
  /// boundaries_rad[0]. Requires an even, strictly increasing boundary list.
  static SectorPlate alternating(std::vector<double> boundaries_rad);

  /// The plate rotated so that t'(theta) = t(theta - alpha).
  SectorPlate rotated(Angle alpha) const;

  /// Complex transmission at azimuth theta; unit modulus by construction.
  /// A boundary angle belongs to the sector it starts.
  std::complex<double> transmission(Angle theta) const;

  std::size_t sector_count() const { return boundaries_.size(); }
  const std::vector<double>& boundaries() const { return boundaries_; }
  const std::vector<double>& phases() const { return phases_; }

  /// Phase of the sector containing theta.
  double phase_at(Angle theta) const;

 private:
  SectorPlate(std::vector<double> boundaries, std::vector<double> phases);

  std::vector<double> boundaries_;
  std::vector<double> phases_;
};

/// True if the two canonicalized plates coincide within `tol`, comparing the
/// sector lists cyclically so that boundaries straddling 0/2*pi still match.
bool approx_equal(const SectorPlate& a, const SectorPlate& b, double tol = kAngleTol);

}  // namespace oamdim

#endif  // OAMDIM_PLATE_HPP
