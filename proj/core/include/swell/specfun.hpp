#pragma once

// Spherical Bessel, Neumann and Hankel functions, associated Legendre
// functions, spherical harmonics and zeros of j_l. All routines are pure and
// work in binary64.

#include <complex>
#include <vector>

namespace swell::specfun {

inline constexpr int kMaxOrder = 100000;

// Polar/azimuthal pair. theta in [0, pi], phi in [0, 2 pi).
class AngularPoint {
public:
  AngularPoint(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

private:
  double theta_;
  double phi_;
};

// Maximum order plus a non-negative argument, for batch evaluation.
class BesselOrderRange {
public:
  BesselOrderRange(int l_max, double x);

  int l_max() const { return l_max_; }
  double x() const { return x_; }

private:
  int l_max_;
  double x_;
};

/// Spherical Bessel function of the first kind j_l(x), x >= 0.
///
/// Uses the ascending series for small arguments, upward recurrence for
/// x > l and Miller's downward recurrence in between. Values deep in the
/// evanescent region (l >> x) may underflow to zero.
double sph_bessel_j(int l, double x);

/// j_0(x) .. j_{l_max}(x) in one sweep.
std::vector<double> sph_bessel_j_all(const BesselOrderRange& range);

/// Spherical Neumann function n_l(x) = y_l(x), x > 0. n_0(x) = -cos(x)/x.
double sph_bessel_n(int l, double x);

// h0^(1)(x) = -i e^{ix}/x (kind 1) and h0^(2)(x) = i e^{-ix}/x (kind 2).
std::complex<double> sph_hankel0(int kind, double x);

/// Associated Legendre function P_l^m(u) for 0 <= m <= l, |u| <= 1, without
/// the Condon-Shortley phase.
double assoc_legendre(int l, int m, double u);

/// Y_l^m(theta, phi) = (-1)^{(m+|m|)/2} sqrt((2l+1)/4pi (l-|m|)!/(l+|m|)!)
///                     P_l^{|m|}(cos theta) e^{i m phi}.
std::complex<double> sph_harmonic(int l, int m, const AngularPoint& point);

/// k-th positive zero of j_l, k >= 1.
double sph_bessel_zero(int l, int k);

}  // namespace swell::specfun
