#ifndef OAMDIM_FRINGE_HPP
#define OAMDIM_FRINGE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "oamdim/dimension.hpp"
#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

namespace oamdim {

/// Coincidence rate sampled on the uniform grid delta_j = 2*pi*j/size over
/// [0, 2*pi). Rates are dimensionless and unnormalized.
struct Fringe {
  std::vector<double> rates;

  std::size_t size() const { return rates.size(); }
  double delta_rad(std::size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(rates.size());
  }
};

/// Two-photon coincidence fringe from truncated analyzer spectra and a
/// source spectrum:
///   C(delta) = |sum_l sqrt(lambda_l) conj(cA_l) conj(cB_{-l}) e^{-il delta}|^2
/// with the source weights used peak-normalized (a flat source contributes
/// unit weights, so C(0) = (sum gamma)^2 for identical real plates).
/// Coefficients or weights missing from either window count as zero.
/// Requires samples >= 4*max(l_max_a, l_max_b) + 1 so the trigonometric
/// polynomial is resolved exactly by the grid.
Fringe coincidence_fringe(const ModeSpectrum& spec_a, const ModeSpectrum& spec_b,
                          const SourceSpectrum& source, long samples);

/// Coincidence fringe of two plates under a broad flat source (every mode
/// weighted equally), evaluated in closed form:
///   C(delta) = |1/(2*pi) integral conj(tA(theta)) conj(tB(theta-delta)) dtheta|^2.
/// The integrand is piecewise constant, so accumulating sector overlaps gives
/// the untruncated fringe exactly -- no mode cutoff is involved.
Fringe coincidence_fringe(const SectorPlate& plate_a, const SectorPlate& plate_b, long samples);

/// Gram-matrix entry <X(xi)|X(xi')> = sum_l gamma_l e^{il(xi'-xi)} for one
/// analyzer rotated to two settings.
std::complex<double> analyzer_overlap(const ModeSpectrum& spectrum, Angle xi, Angle xi_prime);

/// Independent real-space check of the fringe shape: the squared mode
/// overlap of the two analyzers (advanced-wave picture, valid for a source
/// much broader than the analyzers),
///   C(delta) = |1/(2*pi) integral conj(tA(theta)) tB(theta-delta) dtheta|^2,
/// computed by composite midpoint quadrature on a uniform grid with panels
/// split at every sector boundary. Shares no code with the pipelines above.
Fringe overlap_fringe_oracle(const SectorPlate& plate_a, const SectorPlate& plate_b,
                             long samples, long quad_points);

/// (max - min) / (max + min). Throws if the fringe never rises above zero.
double visibility(const Fringe& fringe);

/// Inverse of the mean of the peak-normalized fringe. On a grid finer than
/// 4*l_max + 1 points this equals the Shannon dimensionality of the analyzer
/// spectrum exactly (the fringe is a trigonometric polynomial, so the
/// uniform-grid mean integrates it exactly).
double fringe_dimension(const Fringe& fringe);

}  // namespace oamdim

#endif  // OAMDIM_FRINGE_HPP
