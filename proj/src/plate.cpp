#include "oamdim/plate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace oamdim {

namespace {

void validate_input(const std::vector<double>& boundaries, const std::vector<double>& phases) {
  if (boundaries.empty()) throw std::invalid_argument("sector plate: boundary list is empty");
  if (boundaries.size() != phases.size()) {
    throw std::invalid_argument("sector plate: " + std::to_string(boundaries.size()) +
                                " boundaries but " + std::to_string(phases.size()) + " phases");
  }
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    double b = boundaries[k];
    if (!(b >= 0.0) || !(b < kTwoPi)) {
      throw std::invalid_argument("sector plate: boundary " + std::to_string(k) +
                                  " out of range [0, 2*pi): " + std::to_string(b));
    }
    if (k > 0 && !(boundaries[k - 1] < b)) {
      throw std::invalid_argument("sector plate: boundaries not strictly increasing at index " +
                                  std::to_string(k));
    }
  }
  for (double p : phases) {
    if (!std::isfinite(p)) throw std::invalid_argument("sector plate: non-finite phase");
  }
}

// Phases compare equal when they coincide on the circle within kAngleTol.
bool same_phase(double a, double b) { return angle_near(a, b, kAngleTol); }

}  // namespace

SectorPlate::SectorPlate(std::vector<double> boundaries, std::vector<double> phases)
    : boundaries_(std::move(boundaries)), phases_(std::move(phases)) {
  for (double& p : phases_) p = wrap_two_pi(p);

  // Drop zero-width sectors (possible after rotation wrap-around).
  {
    std::vector<double> b2, p2;
    b2.reserve(boundaries_.size());
    p2.reserve(phases_.size());
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
      std::size_t next = (k + 1) % boundaries_.size();
      double width = wrap_two_pi(boundaries_[next] - boundaries_[k]);
      if (boundaries_.size() > 1 && width == 0.0) continue;
      b2.push_back(boundaries_[k]);
      p2.push_back(phases_[k]);
    }
    boundaries_ = std::move(b2);
    phases_ = std::move(p2);
  }

  // Merge adjacent sectors with equal phases.
  {
    std::vector<double> b2, p2;
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
      if (!p2.empty() && same_phase(phases_[k], p2.back())) continue;
      b2.push_back(boundaries_[k]);
      p2.push_back(phases_[k]);
    }
    // The last sector wraps into the first.
    if (b2.size() > 1 && same_phase(p2.front(), p2.back())) {
      b2.erase(b2.begin());
      p2.erase(p2.begin());
    }
    boundaries_ = std::move(b2);
    phases_ = std::move(p2);
  }

  if (boundaries_.size() == 1) boundaries_[0] = 0.0;  // uniform plate: position immaterial
}

SectorPlate SectorPlate::from_sectors(std::vector<double> boundaries_rad,
                                      std::vector<double> phases_rad) {
  validate_input(boundaries_rad, phases_rad);
  return SectorPlate(std::move(boundaries_rad), std::move(phases_rad));
}

SectorPlate SectorPlate::uniform() { return SectorPlate({0.0}, {0.0}); }

SectorPlate SectorPlate::single_sector(Angle delta) {
  double d = delta.radians();
  if (d == 0.0) return uniform();
  return SectorPlate({0.0, d}, {kPi, 0.0});
}

SectorPlate SectorPlate::alternating(std::vector<double> boundaries_rad) {
  if (boundaries_rad.empty() || boundaries_rad.size() % 2 != 0) {
    throw std::invalid_argument("alternating plate: boundary count must be even and positive, got " +
                                std::to_string(boundaries_rad.size()));
  }
  std::vector<double> phases(boundaries_rad.size());
  for (std::size_t k = 0; k < phases.size(); ++k) phases[k] = (k % 2 == 0) ? kPi : 0.0;
  validate_input(boundaries_rad, phases);
  return SectorPlate(std::move(boundaries_rad), std::move(phases));
}

SectorPlate SectorPlate::rotated(Angle alpha) const {
  std::vector<std::pair<double, double>> sectors(boundaries_.size());
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    sectors[k] = {wrap_two_pi(boundaries_[k] + alpha.radians()), phases_[k]};
  }
  std::sort(sectors.begin(), sectors.end());
  std::vector<double> b(sectors.size()), p(sectors.size());
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    b[k] = sectors[k].first;
    p[k] = sectors[k].second;
  }
  return SectorPlate(std::move(b), std::move(p));
}

double SectorPlate::phase_at(Angle theta) const {
  double t = theta.radians();
  if (t < boundaries_.front()) return phases_.back();  // wrap-around sector
  auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), t);
  return phases_[static_cast<std::size_t>(it - boundaries_.begin()) - 1];
}

std::complex<double> SectorPlate::transmission(Angle theta) const {
  return cis(phase_at(theta));
}

bool approx_equal(const SectorPlate& a, const SectorPlate& b, double tol) {
  const std::size_t n = a.sector_count();
  if (n != b.sector_count()) return false;
  if (n == 1) return angle_near(a.phases()[0], b.phases()[0], tol);
  // Cyclic match: boundaries near 0 may canonicalize to either end of the list.
  for (std::size_t off = 0; off < n; ++off) {
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      std::size_t j = (k + off) % n;
      ok = angle_near(a.boundaries()[k], b.boundaries()[j], tol) &&
           angle_near(a.phases()[k], b.phases()[j], tol);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oamdim
