#include "oamdim/angle.hpp"

#include <cmath>

namespace oamdim {

namespace {
constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
}

double wrap_two_pi(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can land exactly on 2*pi after the correction above.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double circular_distance(double a_rad, double b_rad) {
  double d = std::fabs(wrap_two_pi(a_rad) - wrap_two_pi(b_rad));
  return d > kPi ? kTwoPi - d : d;
}

bool angle_near(double a_rad, double b_rad, double tol) {
  return circular_distance(a_rad, b_rad) <= tol;
}

std::complex<double> cis(long double x) {
  long double r = std::fmod(x, kTwoPiL);
  double rd = static_cast<double>(r);
  return {std::cos(rd), std::sin(rd)};
}

std::complex<double> mode_phasor(std::int64_t l, double theta_rad) {
  return cis(-static_cast<long double>(l) * static_cast<long double>(theta_rad));
}

}  // namespace oamdim
