#ifndef OAMDIM_ANGLE_HPP
#define OAMDIM_ANGLE_HPP

#include <complex>
#include <cstdint>
#include <numbers>

namespace oamdim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance for angle and phase comparisons (radians).
inline constexpr double kAngleTol = 1e-12;

/// Reduce an angle to the canonical range [0, 2*pi). Total and idempotent.
double wrap_two_pi(double radians);

/// Distance between two angles measured around the circle, in [0, pi].
double circular_distance(double a_rad, double b_rad);

/// True if two angles coincide on the circle within `tol`.
bool angle_near(double a_rad, double b_rad, double tol = kAngleTol);

/// An angle stored in the canonical range [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  Angle(double radians) : radians_(wrap_two_pi(radians)) {}  // NOLINT(runtime/explicit)

  static Angle from_degrees(double degrees) { return Angle(degrees * kPi / 180.0); }

  double radians() const { return radians_; }
  double degrees() const { return radians_ * 180.0 / kPi; }

  friend Angle operator+(Angle a, Angle b) { return Angle(a.radians_ + b.radians_); }
  friend Angle operator-(Angle a, Angle b) { return Angle(a.radians_ - b.radians_); }

 private:
  double radians_ = 0.0;
};

/// exp(i*x) with long-double range reduction, accurate for |x| up to ~1e8.
std::complex<double> cis(long double x);

/// exp(-i*l*theta); the phasor attached to OAM order l at azimuth theta.
std::complex<double> mode_phasor(std::int64_t l, double theta_rad);

}  // namespace oamdim

#endif  // OAMDIM_ANGLE_HPP
