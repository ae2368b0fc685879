#include "oamdim/dimension.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace oamdim {

SourceSpectrum::SourceSpectrum(int l_max, std::vector<double> weights, double sum, double max)
    : l_max_(l_max), weights_(std::move(weights)), sum_(sum), max_(max) {}

SourceSpectrum SourceSpectrum::from_weights(std::vector<double> weights) {
  if (weights.empty() || weights.size() % 2 == 0) {
    throw std::invalid_argument("source spectrum: weight count must be odd (symmetric window)");
  }
  long double sum = 0.0L;
  double max = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("source spectrum: weight " + std::to_string(i) +
                                  " is negative or not finite");
    }
    sum += w;
    if (w > max) max = w;
  }
  if (max == 0.0) throw std::invalid_argument("source spectrum: all weights are zero");
  const int l_max = static_cast<int>(weights.size() / 2);
  return SourceSpectrum(l_max, std::move(weights), static_cast<double>(sum), max);
}

SourceSpectrum SourceSpectrum::flat(int l_max) {
  if (l_max < 0) throw std::invalid_argument("source spectrum: negative l_max");
  return from_weights(std::vector<double>(2 * static_cast<std::size_t>(l_max) + 1, 1.0));
}

SourceSpectrum SourceSpectrum::gaussian(int l_max, double sigma) {
  if (l_max < 0) throw std::invalid_argument("source spectrum: negative l_max");
  if (!(sigma > 0.0)) throw std::invalid_argument("source spectrum: sigma must be > 0");
  std::vector<double> w(2 * static_cast<std::size_t>(l_max) + 1);
  for (int l = -l_max; l <= l_max; ++l) {
    w[static_cast<std::size_t>(l + l_max)] =
        std::exp(-0.5 * static_cast<double>(l) * static_cast<double>(l) / (sigma * sigma));
  }
  return from_weights(std::move(w));
}

double SourceSpectrum::weight(int l) const {
  if (l < -l_max_ || l > l_max_) return 0.0;
  return weights_[static_cast<std::size_t>(l + l_max_)] / sum_;
}

double SourceSpectrum::peak_weight(int l) const {
  if (l < -l_max_ || l > l_max_) return 0.0;
  return weights_[static_cast<std::size_t>(l + l_max_)] / max_;
}

double shannon_dimension(const ModeSpectrum& spectrum) {
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (const auto& c : spectrum.coefficients()) {
    const long double g = std::norm(c);
    sum += g;
    sum_sq += g * g;
  }
  if (sum_sq <= 0.0L) throw std::domain_error("shannon_dimension: all-zero spectrum");
  return static_cast<double>(sum * sum / sum_sq);
}

double schmidt_number(const SourceSpectrum& source) {
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  for (double w : source.raw_weights()) {
    sum += w;
    sum_sq += static_cast<long double>(w) * w;
  }
  return static_cast<double>(sum * sum / sum_sq);
}

double single_sector_dimension(double delta_rad) {
  if (!(delta_rad >= 0.0) || !(delta_rad <= kTwoPi)) {
    throw std::invalid_argument("single_sector_dimension: delta outside [0, 2*pi]: " +
                                std::to_string(delta_rad));
  }
  double d = delta_rad;
  if (d > kPi) d = kTwoPi - d;
  const double u = d / kPi;
  const double denom = 1.0 + u * (-4.0 + u * (6.0 - (8.0 / 3.0) * u));
  return 1.0 / denom;
}

namespace {

AnalyzerDimension stream_dimension(const SectorPlate& plate, const LmaxOptions& options,
                                   bool renormalize_to_window) {
  CoefficientScan scan(plate);
  long double power = std::norm(scan.c0());
  long double power_sq = power * power;
  std::int64_t l = 0;
  while (!(1.0L - power < options.residual) && l < options.cap) {
    auto [pos, neg] = scan.next();
    const long double gp = std::norm(pos);
    const long double gn = std::norm(neg);
    power += gp + gn;
    power_sq += gp * gp + gn * gn;
    ++l;
  }
  if (power_sq <= 0.0L) throw std::domain_error("analyzer dimension: all-zero spectrum");
  const long double numerator = renormalize_to_window ? power * power : 1.0L;
  return AnalyzerDimension{static_cast<double>(numerator / power_sq), l,
                           static_cast<double>(power)};
}

}  // namespace

AnalyzerDimension analyzer_dimension(const SectorPlate& plate, const LmaxOptions& options) {
  return stream_dimension(plate, options, /*renormalize_to_window=*/false);
}

AnalyzerDimension windowed_dimension(const SectorPlate& plate, const LmaxOptions& options) {
  return stream_dimension(plate, options, /*renormalize_to_window=*/true);
}

}  // namespace oamdim
