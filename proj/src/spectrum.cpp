#include "oamdim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace oamdim {

namespace {
constexpr std::int64_t kResyncInterval = 256;
}

ModeSpectrum::ModeSpectrum(int l_max, std::vector<std::complex<double>> coefficients)
    : l_max_(l_max), coefficients_(std::move(coefficients)) {
  if (l_max_ < 0) throw std::invalid_argument("mode spectrum: negative l_max");
  if (coefficients_.size() != 2 * static_cast<std::size_t>(l_max_) + 1) {
    throw std::invalid_argument("mode spectrum: coefficient count does not match l_max");
  }
  long double power = 0.0L;
  for (const auto& c : coefficients_) power += std::norm(c);
  if (power > 1.0L + 1e-9L) {
    throw std::invalid_argument("mode spectrum: captured power exceeds unity");
  }
}

std::complex<double> ModeSpectrum::coefficient(int l) const {
  if (l < -l_max_ || l > l_max_) return {0.0, 0.0};
  return coefficients_[static_cast<std::size_t>(l + l_max_)];
}

double ModeSpectrum::gamma(int l) const { return std::norm(coefficient(l)); }

CoefficientScan::CoefficientScan(const SectorPlate& plate)
    : boundaries_(plate.boundaries()) {
  const std::size_t m = boundaries_.size();
  std::vector<std::complex<double>> values(m);
  for (std::size_t k = 0; k < m; ++k) values[k] = cis(plate.phases()[k]);

  c0_ = {0.0, 0.0};
  for (std::size_t k = 0; k < m; ++k) {
    double next = (k + 1 < m) ? boundaries_[k + 1] : boundaries_[0] + kTwoPi;
    c0_ += values[k] * ((next - boundaries_[k]) / kTwoPi);
  }

  jumps_.resize(m);
  step_.resize(m);
  phasor_.assign(m, {1.0, 0.0});
  for (std::size_t k = 0; k < m; ++k) {
    jumps_[k] = values[k] - values[(k + m - 1) % m];
    step_[k] = cis(-static_cast<long double>(boundaries_[k]));
  }
}

void CoefficientScan::resync() {
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    phasor_[k] = mode_phasor(l_, boundaries_[k]);
  }
}

std::pair<std::complex<double>, std::complex<double>> CoefficientScan::next() {
  ++l_;
  if (l_ % kResyncInterval == 0) {
    resync();
  } else {
    for (std::size_t k = 0; k < phasor_.size(); ++k) phasor_[k] *= step_[k];
  }
  std::complex<double> pos{0.0, 0.0};
  std::complex<double> neg{0.0, 0.0};
  for (std::size_t k = 0; k < phasor_.size(); ++k) {
    pos += jumps_[k] * phasor_[k];
    neg += jumps_[k] * std::conj(phasor_[k]);
  }
  // c_l = sum_k J_k exp(-i*l*b_k) / (2*pi*i*l)
  const std::complex<double> denom_pos{0.0, kTwoPi * static_cast<double>(l_)};
  return {pos / denom_pos, neg / (-denom_pos)};
}

ModeSpectrum mode_spectrum(const SectorPlate& plate, int l_max) {
  if (l_max < 0) throw std::invalid_argument("mode_spectrum: negative l_max");
  std::vector<std::complex<double>> coeffs(2 * static_cast<std::size_t>(l_max) + 1);
  CoefficientScan scan(plate);
  coeffs[static_cast<std::size_t>(l_max)] = scan.c0();
  for (int l = 1; l <= l_max; ++l) {
    auto [pos, neg] = scan.next();
    coeffs[static_cast<std::size_t>(l_max + l)] = pos;
    coeffs[static_cast<std::size_t>(l_max - l)] = neg;
  }
  return ModeSpectrum(l_max, std::move(coeffs));
}

QuadratureSpectrum mode_spectrum_quadrature(const SectorPlate& plate, int l_max, long samples) {
  if (l_max < 0) throw std::invalid_argument("mode_spectrum_quadrature: negative l_max");
  const long minimum = 4 * (static_cast<long>(l_max) + static_cast<long>(plate.sector_count()));
  if (samples < minimum) {
    throw std::invalid_argument("mode_spectrum_quadrature: needs at least " +
                                std::to_string(minimum) + " samples, got " +
                                std::to_string(samples));
  }

  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(samples) + plate.sector_count() + 1);
  for (long j = 0; j <= samples; ++j) {
    edges.push_back(kTwoPi * static_cast<double>(j) / static_cast<double>(samples));
  }
  edges.insert(edges.end(), plate.boundaries().begin(), plate.boundaries().end());
  std::sort(edges.begin(), edges.end());

  const std::size_t n = 2 * static_cast<std::size_t>(l_max) + 1;
  std::vector<std::complex<double>> coeffs(n);
  double max_width = 0.0;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double width = edges[e + 1] - edges[e];
    if (width <= 0.0) continue;
    max_width = std::max(max_width, width);
    const double mid = 0.5 * (edges[e] + edges[e + 1]);
    const std::complex<double> t = plate.transmission(mid) * (width / kTwoPi);
    const std::complex<double> base = cis(-static_cast<long double>(mid));
    std::complex<double> w{1.0, 0.0};
    coeffs[static_cast<std::size_t>(l_max)] += t;
    for (int l = 1; l <= l_max; ++l) {
      w *= base;
      coeffs[static_cast<std::size_t>(l_max + l)] += t * w;
      coeffs[static_cast<std::size_t>(l_max - l)] += t * std::conj(w);
    }
  }
  return QuadratureSpectrum{ModeSpectrum(l_max, std::move(coeffs)), max_width};
}

ModeSpectrum truncate_spectrum(const ModeSpectrum& spectrum, int l_cut) {
  if (l_cut < 0) throw std::invalid_argument("truncate_spectrum: negative l_cut");
  const int l_keep = std::min(l_cut, spectrum.l_max());
  long double retained = 0.0L;
  for (int l = -l_keep; l <= l_keep; ++l) retained += spectrum.gamma(l);
  // Power at the rounding-noise floor would renormalize pure noise to unity.
  if (retained <= 1e-24L) {
    throw std::domain_error("truncate_spectrum: no power survives the cut, cannot renormalize");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(retained));
  std::vector<std::complex<double>> coeffs(2 * static_cast<std::size_t>(l_keep) + 1);
  for (int l = -l_keep; l <= l_keep; ++l) {
    coeffs[static_cast<std::size_t>(l + l_keep)] = spectrum.coefficient(l) * scale;
  }
  return ModeSpectrum(l_keep, std::move(coeffs));
}

double captured_power(const ModeSpectrum& spectrum) {
  long double power = 0.0L;
  for (const auto& c : spectrum.coefficients()) power += std::norm(c);
  return static_cast<double>(power);
}

std::int64_t default_l_max(const SectorPlate& plate, const LmaxOptions& options) {
  if (!(options.residual > 0.0)) throw std::invalid_argument("default_l_max: residual must be > 0");
  CoefficientScan scan(plate);
  long double power = std::norm(scan.c0());
  std::int64_t l = 0;
  while (!(1.0L - power < options.residual) && l < options.cap) {
    auto [pos, neg] = scan.next();
    power += std::norm(pos) + std::norm(neg);
    ++l;
  }
  return l;
}

}  // namespace oamdim
