#ifndef OAMDIM_DIMENSION_HPP
#define OAMDIM_DIMENSION_HPP

#include <cstdint>
#include <vector>

#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

namespace oamdim {

/// Schmidt weights lambda_l of the generated two-photon state over a
/// symmetric window l in [-l_max, l_max]. Weights are kept as given
/// (validated nonnegative, not all zero); accessors expose them normalized
/// to unit sum.
class SourceSpectrum {
 public:
  /// weights.size() must be odd; entry [l + l_max] holds lambda_l.
  static SourceSpectrum from_weights(std::vector<double> weights);

  /// Equal weights over l in [-l_max, l_max].
  static SourceSpectrum flat(int l_max);

  /// Weights proportional to exp(-l^2 / (2*sigma^2)).
  static SourceSpectrum gaussian(int l_max, double sigma);

  int l_max() const { return l_max_; }

  /// lambda_l normalized to unit sum; zero outside the window.
  double weight(int l) const;

  /// lambda_l scaled so the largest weight is one; zero outside the window.
  /// This is the scale used in fringe simulation, where only relative
  /// weights matter and a flat source reduces to unit weights.
  double peak_weight(int l) const;

  const std::vector<double>& raw_weights() const { return weights_; }

 private:
  SourceSpectrum(int l_max, std::vector<double> weights, double sum, double max);

  int l_max_;
  std::vector<double> weights_;
  double sum_;
  double max_;
};

/// Shannon dimensionality of a detection-state spectrum:
/// (sum gamma)^2 / sum gamma^2, i.e. the inverse participation ratio of the
/// gammas after normalizing them to unit sum, so a truncated window does not
/// bias the result upward. Throws on an all-zero spectrum.
double shannon_dimension(const ModeSpectrum& spectrum);

/// Schmidt number K = 1 / sum(lambda^2) of a unit-sum source, computed in
/// the scale-invariant form (sum w)^2 / sum w^2 so uniform integer weights
/// give an exact integer.
double schmidt_number(const SourceSpectrum& source);

/// Closed-form Shannon dimensionality of a single-sector plate of angle
/// delta (radians):
///   D(delta) = [1 - 4 u + 6 u^2 - (8/3) u^3]^(-1),  u = delta/pi,
/// for delta in [0, pi], extended by the reflection D(2*pi - delta).
/// Throws outside [0, 2*pi].
double single_sector_dimension(double delta_rad);

struct AnalyzerDimension {
  double dimension;
  std::int64_t l_max;
  double captured;  // sum of gamma over the window used
};

/// Shannon dimensionality of a plate analyzer over all modes, streamed until
/// the Parseval residual drops below options.residual (or the cap is hit).
/// A pure phase plate has unit transmission modulus, so the gammas sum to
/// exactly one over all l; the normalizer needs no scan and the window only
/// truncates sum(gamma^2), whose tail enters at third order in 1/l_max. The
/// result is therefore accurate far beyond the residual itself.
AnalyzerDimension analyzer_dimension(const SectorPlate& plate, const LmaxOptions& options = {});

/// Shannon dimensionality of the analyzer restricted to the window chosen by
/// the residual rule: identical to
/// shannon_dimension(mode_spectrum(plate, l_max)) without materializing the
/// spectrum. This windowed value is what the optimizer reports.
AnalyzerDimension windowed_dimension(const SectorPlate& plate, const LmaxOptions& options = {});

}  // namespace oamdim

#endif  // OAMDIM_DIMENSION_HPP
