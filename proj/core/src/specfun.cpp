#include "swell/errors.hpp"
#include "swell/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace swell::specfun {

AngularPoint::AngularPoint(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("polar angle must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw DomainError("azimuthal angle must lie in [0, 2 pi)");
  }
}

double assoc_legendre(int l, int m, double u) {
  if (l < 0 || m < 0 || m > l || l > kMaxOrder) {
    throw DomainError("invalid associated Legendre indices (l=" + std::to_string(l) +
                      ", m=" + std::to_string(m) + ")");
  }
  if (!(std::abs(u) <= 1.0)) {
    throw DomainError("associated Legendre argument must lie in [-1, 1]");
  }

  // P_m^m = (2m-1)!! (1-u^2)^{m/2}
  const double sin_theta = std::sqrt((1.0 - u) * (1.0 + u));
  double p_mm = 1.0;
  double odd = 1.0;
  for (int i = 1; i <= m; ++i) {
    p_mm *= odd * sin_theta;
    odd += 2.0;
  }
  if (l == m) {
    return p_mm;
  }

  double p_lower = p_mm;
  double p_here = u * (2.0 * m + 1.0) * p_mm;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double p_next = (u * (2.0 * ll - 1.0) * p_here - (ll + m - 1.0) * p_lower) / (ll - m);
    p_lower = p_here;
    p_here = p_next;
  }
  return p_here;
}

std::complex<double> sph_harmonic(int l, int m, const AngularPoint& point) {
  const int am = std::abs(m);
  if (l < 0 || am > l) {
    throw DomainError("invalid spherical harmonic indices (l=" + std::to_string(l) +
                      ", m=" + std::to_string(m) + ")");
  }

  // (l-|m|)! / (l+|m|)!
  double factorial_ratio = 1.0;
  for (int i = l - am + 1; i <= l + am; ++i) {
    factorial_ratio /= i;
  }
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * factorial_ratio);
  const double phase = ((m + am) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double radial = phase * norm * assoc_legendre(l, am, std::cos(point.theta()));
  return radial * std::polar(1.0, m * point.phi());
}

}  // namespace swell::specfun
