#ifndef OAMDIM_SPECTRUM_HPP
#define OAMDIM_SPECTRUM_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "oamdim/plate.hpp"

namespace oamdim {

/// OAM expansion coefficients c_l of an analyzer detection state over
/// l in [-l_max, l_max]; gamma(l) = |c_l|^2 is the modal sensitivity.
class ModeSpectrum {
 public:
  /// coefficients.size() must equal 2*l_max + 1; entry [l + l_max] holds c_l.
  ModeSpectrum(int l_max, std::vector<std::complex<double>> coefficients);

  int l_max() const { return l_max_; }

  /// c_l, zero outside the stored window.
  std::complex<double> coefficient(int l) const;

  /// gamma_l = |c_l|^2, zero outside the stored window.
  double gamma(int l) const;

  const std::vector<std::complex<double>>& coefficients() const { return coefficients_; }

 private:
  int l_max_;
  std::vector<std::complex<double>> coefficients_;
};

/// Incremental evaluation of a plate's Fourier coefficients
///   c_l = 1/(2*pi) * integral t(theta) exp(-i*l*theta) dtheta,
/// written as a sum over the transmission jumps at the sector boundaries so
/// that each next l costs one complex multiply per boundary. Phasors are
/// periodically re-synchronized from range-reduced arguments, keeping the
/// drift below ~1e-13 even for l in the millions.
class CoefficientScan {
 public:
  explicit CoefficientScan(const SectorPlate& plate);

  std::complex<double> c0() const { return c0_; }

  /// Advances from l to l+1 (starting at l = 1) and returns {c_l, c_{-l}}.
  std::pair<std::complex<double>, std::complex<double>> next();

  std::int64_t current_l() const { return l_; }

 private:
  void resync();

  std::vector<double> boundaries_;
  std::vector<std::complex<double>> jumps_;    // t_k - t_{k-1} at boundary k
  std::vector<std::complex<double>> step_;     // exp(-i * b_k)
  std::vector<std::complex<double>> phasor_;   // exp(-i * l * b_k)
  std::complex<double> c0_;
  std::int64_t l_ = 0;
};

/// Closed-form mode spectrum of a plate over l in [-l_max, l_max].
ModeSpectrum mode_spectrum(const SectorPlate& plate, int l_max);

/// Spectrum computed by composite midpoint quadrature on a uniform theta
/// grid whose panels are additionally split at every sector boundary.
/// Fully independent of the closed-form path; used as its oracle.
struct QuadratureSpectrum {
  ModeSpectrum spectrum;
  double max_panel_width;

  /// Bound on |c_l(quadrature) - c_l(exact)|: the midpoint-rule remainder
  /// h^2 l^2 / 24 plus the rounding floor of summing ~2*pi/h panel terms.
  double error_bound(int l) const {
    const double h = max_panel_width;
    return h * h * static_cast<double>(l) * static_cast<double>(l) / 24.0 +
           (kTwoPi / h) * 4e-16;
  }
};
QuadratureSpectrum mode_spectrum_quadrature(const SectorPlate& plate, int l_max, long samples);

/// Zeroes all coefficients with |l| > l_cut and rescales the survivors by a
/// common positive factor so the gammas sum to one. Throws if nothing
/// survives the cut.
ModeSpectrum truncate_spectrum(const ModeSpectrum& spectrum, int l_cut);

/// Sum of gamma_l over the stored window. The deficit 1 - captured_power is
/// the Parseval residual of the truncation (unit-modulus transmission).
double captured_power(const ModeSpectrum& spectrum);

/// Window selection rule: smallest l_max whose Parseval residual drops below
/// `residual`, capped at `cap`.
struct LmaxOptions {
  double residual = 1e-6;
  std::int64_t cap = std::int64_t{1} << 23;
};

std::int64_t default_l_max(const SectorPlate& plate, const LmaxOptions& options = {});

}  // namespace oamdim

#endif  // OAMDIM_SPECTRUM_HPP
