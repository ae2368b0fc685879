#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "oamdim/plate.hpp"
#include "oamdim/spectrum.hpp"

using namespace oamdim;

namespace {

SectorPlate random_plate(std::mt19937_64& rng, bool binary = false) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const int m = count(rng);
  std::vector<double> boundaries(m);
  for (double& b : boundaries) b = angle(rng);
  std::sort(boundaries.begin(), boundaries.end());
  for (int k = 1; k < m; ++k) {
    if (boundaries[k] - boundaries[k - 1] < 1e-6) boundaries[k] = boundaries[k - 1] + 1e-6;
  }
  if (boundaries.back() >= kTwoPi) boundaries.back() = kTwoPi - 1e-6;
  std::vector<double> phases(m);
  for (double& p : phases) p = binary ? (rng() % 2 ? kPi : 0.0) : angle(rng);
  return SectorPlate::from_sectors(boundaries, phases);
}

}  // namespace

TEST_CASE("uniform plate concentrates everything in l = 0") {
  const ModeSpectrum s = mode_spectrum(SectorPlate::uniform(), 8);
  CHECK(s.coefficient(0) == std::complex<double>{1.0, 0.0});
  for (int l = 1; l <= 8; ++l) {
    CHECK(std::abs(s.coefficient(l)) == 0.0);
    CHECK(std::abs(s.coefficient(-l)) == 0.0);
  }
  CHECK(captured_power(s) == 1.0);
}

TEST_CASE("half-sector plate spectrum: odd modes only, gamma_1 = 4/pi^2") {
  const ModeSpectrum s = mode_spectrum(SectorPlate::single_sector(kPi), 9);
  CHECK(std::abs(s.coefficient(0)) < 1e-15);
  for (int l = 2; l <= 8; l += 2) {
    CHECK(std::abs(s.coefficient(l)) < 1e-15);
    CHECK(std::abs(s.coefficient(-l)) < 1e-15);
  }
  const std::complex<double> expected{0.0, 2.0 / kPi};  // c_1 = 2i/pi
  CHECK(std::abs(s.coefficient(1) - expected) < 1e-14);
  CHECK(s.gamma(1) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-13));
  CHECK(s.gamma(-1) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-13));
  CHECK(s.gamma(1) == doctest::Approx(0.405285).epsilon(1e-6));
}

TEST_CASE("negative l_max is rejected") {
  CHECK_THROWS(mode_spectrum(SectorPlate::uniform(), -1));
}

TEST_CASE("phasor recurrence stays accurate at large l") {
  // c_l = 2i/(pi*l) for odd l on the half-sector plate; a drifting
  // recurrence would show up long before l = 10001.
  const ModeSpectrum s = mode_spectrum(SectorPlate::single_sector(kPi), 10001);
  for (int l : {101, 1001, 9999, 10001}) {
    const std::complex<double> expected{0.0, 2.0 / (kPi * l)};
    CHECK(std::abs(s.coefficient(l) - expected) < 1e-13);
    CHECK(std::abs(s.coefficient(-l) - std::conj(expected)) < 1e-13);
  }
  CHECK(std::abs(s.coefficient(5000)) < 1e-13);
}

TEST_CASE("quadrature oracle: uniform plate is exact") {
  const auto q = mode_spectrum_quadrature(SectorPlate::uniform(), 4, 64);
  CHECK(std::abs(q.spectrum.coefficient(0) - std::complex<double>{1.0, 0.0}) < 1e-15);
}

TEST_CASE("quadrature oracle: half-sector c_1 to 1e-9 at 1e5 samples") {
  const auto q = mode_spectrum_quadrature(SectorPlate::single_sector(kPi), 3, 100000);
  const std::complex<double> closed{0.0, 2.0 / kPi};
  CHECK(std::abs(q.spectrum.coefficient(1) - closed) < 1e-9);
  CHECK(std::abs(q.spectrum.coefficient(1) - closed) <= q.error_bound(1));
}

TEST_CASE("quadrature oracle: random 3-sector plate agrees below 1e-8") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> b{angle(rng), angle(rng), angle(rng)};
  std::sort(b.begin(), b.end());
  const SectorPlate plate =
      SectorPlate::from_sectors(b, {angle(rng), angle(rng), angle(rng)});
  const ModeSpectrum exact = mode_spectrum(plate, 8);
  const auto quad = mode_spectrum_quadrature(plate, 8, 80000);
  for (int l = -8; l <= 8; ++l) {
    CHECK(std::abs(quad.spectrum.coefficient(l) - exact.coefficient(l)) < 1e-8);
  }
}

TEST_CASE("quadrature oracle: 100 random plates stay inside the reported bound") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const SectorPlate plate = random_plate(rng);
    const ModeSpectrum exact = mode_spectrum(plate, 8);
    const auto quad = mode_spectrum_quadrature(plate, 8, 4096);
    for (int l = -8; l <= 8; ++l) {
      CHECK(std::abs(quad.spectrum.coefficient(l) - exact.coefficient(l)) <=
            quad.error_bound(l));
    }
  }
}

TEST_CASE("quadrature oracle rejects insufficient sampling") {
  CHECK_THROWS(mode_spectrum_quadrature(SectorPlate::single_sector(kPi), 8, 39));
}

TEST_CASE("truncation renormalizes the surviving modes") {
  const ModeSpectrum s = mode_spectrum(SectorPlate::single_sector(kPi), 51);
  const ModeSpectrum cut = truncate_spectrum(s, 1);
  CHECK(cut.l_max() == 1);
  CHECK(cut.gamma(1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(cut.gamma(-1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(cut.coefficient(0)) < 1e-15);
  CHECK(captured_power(cut) == doctest::Approx(1.0).epsilon(1e-13));

  // l_cut at or above l_max only rescales to unit power.
  const ModeSpectrum wide = truncate_spectrum(s, 60);
  CHECK(wide.l_max() == 51);
  CHECK(captured_power(wide) == doctest::Approx(1.0).epsilon(1e-13));
  const double ratio = wide.gamma(1) / s.gamma(1);
  CHECK(wide.gamma(3) / s.gamma(3) == doctest::Approx(ratio).epsilon(1e-12));

  // A half-sector plate has no l = 0 content: nothing survives l_cut = 0.
  CHECK_THROWS(truncate_spectrum(s, 0));
  CHECK_THROWS(truncate_spectrum(s, -1));
}

TEST_CASE("captured power converges to one from below") {
  const SectorPlate half = SectorPlate::single_sector(kPi);
  const double p101 = captured_power(mode_spectrum(half, 101));
  CHECK(1.0 - p101 < 4.0 / (kPi * kPi * 101.0));  // tail bound of the 4/(pi l)^2 series
  CHECK(1.0 - p101 > 0.0);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    const SectorPlate plate = random_plate(rng);
    double prev = -1.0;
    for (int l_max : {4, 16, 64, 256}) {
      const double p = captured_power(mode_spectrum(plate, l_max));
      CHECK(p >= prev);
      prev = p;
    }
    CHECK(1.0 - prev < 0.2);  // well on its way to one
  }

  const double pq = captured_power(mode_spectrum(SectorPlate::single_sector(kPi / 2), 4096));
  CHECK(1.0 - pq < 1.5e-4);
}

TEST_CASE("rotation theorem: c_l picks up e^{-il alpha}, gamma is invariant") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int i = 0; i < 30; ++i) {
    const SectorPlate plate = random_plate(rng);
    const double alpha = angle(rng);
    const ModeSpectrum base = mode_spectrum(plate, 24);
    const ModeSpectrum rot = mode_spectrum(plate.rotated(alpha), 24);
    for (int l = -24; l <= 24; ++l) {
      const std::complex<double> expected = base.coefficient(l) * mode_phasor(l, alpha);
      CHECK(std::abs(rot.coefficient(l) - expected) < 1e-12);
      CHECK(std::fabs(rot.gamma(l) - base.gamma(l)) < 1e-12);
    }
  }
}

TEST_CASE("binary plates have conjugate-symmetric spectra") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const SectorPlate plate = random_plate(rng, /*binary=*/true);
    const ModeSpectrum s = mode_spectrum(plate, 16);
    for (int l = 1; l <= 16; ++l) {
      CHECK(std::abs(s.coefficient(-l) - std::conj(s.coefficient(l))) < 1e-13);
    }
  }
}

TEST_CASE("single-sector c_0 matches |1 - delta/pi| and the quadrature oracle") {
  for (double delta : {0.3, 1.0, 2.5}) {
    const SectorPlate plate = SectorPlate::single_sector(delta);
    const ModeSpectrum s = mode_spectrum(plate, 2);
    CHECK(std::abs(s.coefficient(0)) ==
          doctest::Approx(std::fabs(1.0 - delta / kPi)).epsilon(1e-13));
    const auto q = mode_spectrum_quadrature(plate, 2, 50000);
    CHECK(std::abs(q.spectrum.coefficient(0) - s.coefficient(0)) < 1e-12);
  }
}

TEST_CASE("default l_max rule meets its residual and is minimal") {
  const SectorPlate half = SectorPlate::single_sector(kPi);
  const LmaxOptions opts{1e-3, 1 << 20};
  const std::int64_t l = default_l_max(half, opts);
  const double at = captured_power(mode_spectrum(half, static_cast<int>(l)));
  const double below = captured_power(mode_spectrum(half, static_cast<int>(l) - 1));
  CHECK(1.0 - at < opts.residual);
  CHECK(1.0 - below >= opts.residual);

  CHECK(default_l_max(SectorPlate::uniform()) == 0);

  const LmaxOptions capped{1e-12, 128};
  CHECK(default_l_max(half, capped) == 128);
}
