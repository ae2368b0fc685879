#include "oamdim/fringe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace oamdim {

namespace {

// Breakpoints of theta -> conj(tA(theta)) * g(tB(theta - delta)): the sector
// boundaries of A plus those of B shifted by delta.
std::vector<double> merged_breakpoints(const SectorPlate& a, const SectorPlate& b, double delta) {
  std::vector<double> pts;
  pts.reserve(a.sector_count() + b.sector_count());
  pts.insert(pts.end(), a.boundaries().begin(), a.boundaries().end());
  for (double boundary : b.boundaries()) pts.push_back(wrap_two_pi(boundary + delta));
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

Fringe coincidence_fringe(const ModeSpectrum& spec_a, const ModeSpectrum& spec_b,
                          const SourceSpectrum& source, long samples) {
  const int l_top = std::max(spec_a.l_max(), spec_b.l_max());
  const long min_samples = 4L * l_top + 1;
  if (samples < min_samples) {
    throw std::invalid_argument("coincidence_fringe: undersampled, need at least " +
                                std::to_string(min_samples) + " samples, got " +
                                std::to_string(samples));
  }

  const int window = std::min(source.l_max(), l_top);
  std::vector<std::complex<double>> amp(2 * static_cast<std::size_t>(window) + 1);
  for (int l = -window; l <= window; ++l) {
    amp[static_cast<std::size_t>(l + window)] = std::sqrt(source.peak_weight(l)) *
                                                std::conj(spec_a.coefficient(l)) *
                                                std::conj(spec_b.coefficient(-l));
  }

  Fringe fringe;
  fringe.rates.resize(static_cast<std::size_t>(samples));
  for (long j = 0; j < samples; ++j) {
    const double delta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    const std::complex<double> base = cis(-static_cast<long double>(delta));
    std::complex<double> field = amp[static_cast<std::size_t>(window)];
    std::complex<double> phasor{1.0, 0.0};
    for (int l = 1; l <= window; ++l) {
      phasor *= base;
      field += amp[static_cast<std::size_t>(window + l)] * phasor +
               amp[static_cast<std::size_t>(window - l)] * std::conj(phasor);
    }
    fringe.rates[static_cast<std::size_t>(j)] = std::norm(field);
  }
  return fringe;
}

Fringe coincidence_fringe(const SectorPlate& plate_a, const SectorPlate& plate_b, long samples) {
  const long min_samples =
      4L * static_cast<long>(plate_a.sector_count() + plate_b.sector_count()) + 1;
  if (samples < min_samples) {
    throw std::invalid_argument("coincidence_fringe: need at least " +
                                std::to_string(min_samples) + " samples, got " +
                                std::to_string(samples));
  }

  Fringe fringe;
  fringe.rates.resize(static_cast<std::size_t>(samples));
  for (long j = 0; j < samples; ++j) {
    const double delta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    const std::vector<double> pts = merged_breakpoints(plate_a, plate_b, delta);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double lo = pts[k];
      const double hi = (k + 1 < pts.size()) ? pts[k + 1] : pts[0] + kTwoPi;
      const double width = hi - lo;
      if (width <= 0.0) continue;
      const double mid = 0.5 * (lo + hi);
      acc += width * std::conj(plate_a.transmission(mid)) *
             std::conj(plate_b.transmission(mid - delta));
    }
    fringe.rates[static_cast<std::size_t>(j)] = std::norm(acc / kTwoPi);
  }
  return fringe;
}

std::complex<double> analyzer_overlap(const ModeSpectrum& spectrum, Angle xi, Angle xi_prime) {
  const double shift = xi_prime.radians() - xi.radians();
  std::complex<double> acc{0.0, 0.0};
  for (int l = -spectrum.l_max(); l <= spectrum.l_max(); ++l) {
    acc += spectrum.gamma(l) * cis(static_cast<long double>(l) * static_cast<long double>(shift));
  }
  return acc;
}

Fringe overlap_fringe_oracle(const SectorPlate& plate_a, const SectorPlate& plate_b,
                             long samples, long quad_points) {
  if (samples < 1) throw std::invalid_argument("overlap_fringe_oracle: samples must be >= 1");
  const long min_points =
      4L * static_cast<long>(plate_a.sector_count() + plate_b.sector_count() + 1);
  if (quad_points < min_points) {
    throw std::invalid_argument("overlap_fringe_oracle: needs at least " +
                                std::to_string(min_points) + " quadrature points, got " +
                                std::to_string(quad_points));
  }

  Fringe fringe;
  fringe.rates.resize(static_cast<std::size_t>(samples));
  std::vector<double> edges;
  for (long j = 0; j < samples; ++j) {
    const double delta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    edges.clear();
    edges.reserve(static_cast<std::size_t>(quad_points) + plate_a.sector_count() +
                  plate_b.sector_count() + 1);
    for (long q = 0; q <= quad_points; ++q) {
      edges.push_back(kTwoPi * static_cast<double>(q) / static_cast<double>(quad_points));
    }
    edges.insert(edges.end(), plate_a.boundaries().begin(), plate_a.boundaries().end());
    for (double boundary : plate_b.boundaries()) edges.push_back(wrap_two_pi(boundary + delta));
    std::sort(edges.begin(), edges.end());

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      const double width = edges[e + 1] - edges[e];
      if (width <= 0.0) continue;
      const double mid = 0.5 * (edges[e] + edges[e + 1]);
      acc += width * std::conj(plate_a.transmission(mid)) * plate_b.transmission(mid - delta);
    }
    fringe.rates[static_cast<std::size_t>(j)] = std::norm(acc / kTwoPi);
  }
  return fringe;
}

double visibility(const Fringe& fringe) {
  if (fringe.rates.empty()) throw std::invalid_argument("visibility: empty fringe");
  const auto [lo, hi] = std::minmax_element(fringe.rates.begin(), fringe.rates.end());
  if (!(*hi > 0.0)) throw std::domain_error("visibility: fringe peak is zero");
  return (*hi - *lo) / (*hi + *lo);
}

double fringe_dimension(const Fringe& fringe) {
  if (fringe.rates.empty()) throw std::invalid_argument("fringe_dimension: empty fringe");
  const double peak = *std::max_element(fringe.rates.begin(), fringe.rates.end());
  if (!(peak > 0.0)) throw std::domain_error("fringe_dimension: fringe peak is zero");
  long double sum = 0.0L;
  for (double r : fringe.rates) sum += r;
  const long double mean = sum / static_cast<long double>(fringe.rates.size());
  return static_cast<double>(static_cast<long double>(peak) / mean);
}

}  // namespace oamdim
