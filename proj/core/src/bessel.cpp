#include "swell/errors.hpp"
#include "swell/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace swell::specfun {

namespace {

constexpr double kRescaleThreshold = 1e280;
constexpr double kRescaleFactor = 1e-280;

void check_order(int l) {
  if (l < 0) {
    throw DomainError("spherical Bessel order must be non-negative, got " + std::to_string(l));
  }
  if (l > kMaxOrder) {
    throw DomainError("spherical Bessel order " + std::to_string(l) + " exceeds ceiling " +
                      std::to_string(kMaxOrder));
  }
}

void check_argument(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("spherical Bessel argument must be finite");
  }
  if (x < 0.0) {
    throw DomainError("spherical Bessel argument must be non-negative");
  }
}

double j0_closed(double x) { return std::sin(x) / x; }
double j1_closed(double x) { return (std::sin(x) / x - std::cos(x)) / x; }

// The ascending series alternates with terms of size ~ y^k/k!, y = x^2/(4l+6),
// so cancellation costs about e^{2y}. Keep y <= 1.
bool series_regime(int l, double x) {
  if (x < 0.5) {
    return true;
  }
  const double dl = static_cast<double>(l);
  return x < 0.1 * dl && x * x <= 2.0 * (2.0 * dl + 3.0);
}

// Sum of (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1)).
double series_sum(int l, double x) {
  const double y = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= y / (static_cast<double>(k) * (2.0 * l + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

double series(int l, double x) {
  // x^l / (2l+1)!!
  double prefactor = 1.0;
  for (int i = 1; i <= l && prefactor != 0.0; ++i) {
    prefactor *= x / (2.0 * i + 1.0);
  }
  if (prefactor == 0.0) {
    return 0.0;
  }
  return prefactor * series_sum(l, x);
}

std::vector<double> series_all(int l_max, double x) {
  std::vector<double> out(static_cast<std::size_t>(l_max) + 1, 0.0);
  double prefactor = 1.0;
  for (int l = 0; l <= l_max; ++l) {
    if (l > 0) {
      prefactor *= x / (2.0 * l + 1.0);
    }
    if (prefactor == 0.0) {
      break;
    }
    out[static_cast<std::size_t>(l)] = prefactor * series_sum(l, x);
  }
  return out;
}

std::vector<double> upward_all(int l_max, double x) {
  std::vector<double> out(static_cast<std::size_t>(l_max) + 1);
  out[0] = j0_closed(x);
  if (l_max >= 1) {
    out[1] = j1_closed(x);
  }
  for (int l = 1; l < l_max; ++l) {
    const auto i = static_cast<std::size_t>(l);
    out[i + 1] = (2.0 * l + 1.0) / x * out[i] - out[i - 1];
  }
  return out;
}

int miller_start(int l_max, double x) {
  const int top = std::max(l_max, static_cast<int>(std::ceil(x)));
  return top + std::max(20, static_cast<int>(std::ceil(std::sqrt(40.0 * top))));
}

// Downward recurrence from (j_{N+1}, j_N) = (0, 1) with rescaling, then
// normalization against the larger of the closed-form j_0, j_1. Requires
// x >= 0.5 so a single recurrence step cannot overflow past the threshold.
std::vector<double> miller_all(int l_max, double x) {
  const int keep = std::max(l_max, 1);
  std::vector<double> f(static_cast<std::size_t>(keep) + 1, 0.0);
  std::vector<int> epoch(f.size(), 0);

  int epochs = 0;
  double f_above = 0.0;
  double f_here = 1.0;
  for (int k = miller_start(keep, x); k >= 1; --k) {
    if (k <= keep) {
      f[static_cast<std::size_t>(k)] = f_here;
      epoch[static_cast<std::size_t>(k)] = epochs;
    }
    const double f_below = (2.0 * k + 1.0) / x * f_here - f_above;
    f_above = f_here;
    f_here = f_below;
    if (std::abs(f_here) > kRescaleThreshold) {
      f_here *= kRescaleFactor;
      f_above *= kRescaleFactor;
      ++epochs;
    }
  }
  f[0] = f_here;
  epoch[0] = epochs;

  auto settle = [&](std::size_t i, double scale) {
    double v = f[i] * scale;
    for (int e = epoch[i]; e < epochs && v != 0.0; ++e) {
      v *= kRescaleFactor;
    }
    return v;
  };

  const double j0 = j0_closed(x);
  const double j1 = j1_closed(x);
  const double scale = std::abs(j0) >= std::abs(j1) ? j0 / settle(0, 1.0) : j1 / settle(1, 1.0);

  std::vector<double> out(static_cast<std::size_t>(l_max) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = settle(i, scale);
  }
  return out;
}

}  // namespace

BesselOrderRange::BesselOrderRange(int l_max, double x) : l_max_(l_max), x_(x) {
  check_order(l_max);
  check_argument(x);
}

double sph_bessel_j(int l, double x) {
  check_order(l);
  check_argument(x);
  if (x == 0.0) {
    return l == 0 ? 1.0 : 0.0;
  }
  if (series_regime(l, x)) {
    return series(l, x);
  }
  if (x > l) {
    return upward_all(l, x)[static_cast<std::size_t>(l)];
  }
  return miller_all(l, x)[static_cast<std::size_t>(l)];
}

std::vector<double> sph_bessel_j_all(const BesselOrderRange& range) {
  const int l_max = range.l_max();
  const double x = range.x();
  if (x == 0.0) {
    std::vector<double> out(static_cast<std::size_t>(l_max) + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  if (x < 0.5) {
    return series_all(l_max, x);
  }
  if (x > l_max) {
    return upward_all(l_max, x);
  }
  return miller_all(l_max, x);
}

double sph_bessel_n(int l, double x) {
  check_order(l);
  check_argument(x);
  if (x == 0.0) {
    throw DomainError("spherical Neumann function has a pole at x = 0");
  }
  double below = -std::cos(x) / x;
  if (l == 0) {
    return below;
  }
  double here = (-std::cos(x) / x - std::sin(x)) / x;
  for (int k = 1; k < l && std::isfinite(here); ++k) {
    const double above = (2.0 * k + 1.0) / x * here - below;
    below = here;
    here = above;
  }
  return here;
}

std::complex<double> sph_hankel0(int kind, double x) {
  check_argument(x);
  if (x == 0.0) {
    throw DomainError("spherical Hankel function has a pole at x = 0");
  }
  const double s = std::sin(x) / x;
  const double c = std::cos(x) / x;
  switch (kind) {
    case 1:
      return {s, -c};
    case 2:
      return {s, c};
    default:
      throw DomainError("spherical Hankel kind must be 1 or 2, got " + std::to_string(kind));
  }
}

namespace {

double sph_bessel_j_derivative(int l, double x) {
  if (l == 0) {
    return -sph_bessel_j(1, x);
  }
  return sph_bessel_j(l - 1, x) - (l + 1.0) / x * sph_bessel_j(l, x);
}

}  // namespace

double sph_bessel_zero(int l, int k) {
  check_order(l);
  if (k < 1) {
    throw DomainError("zero index must be positive, got " + std::to_string(k));
  }

  // No positive zero of j_l lies below l + 1/2, and consecutive zeros are at
  // least pi apart, so unit steps see every sign change exactly once.
  constexpr double kStep = 1.0;
  double a = l + 0.5;
  double fa = sph_bessel_j(l, a);
  double b = a;
  double fb = fa;
  int found = 0;
  const long max_steps = 4L * k + 4L * l + 100;
  for (long step = 0;; ++step) {
    if (step > max_steps) {
      throw NumericalError("failed to bracket zero " + std::to_string(k) + " of j_" +
                           std::to_string(l));
    }
    b = a + kStep;
    fb = sph_bessel_j(l, b);
    if (std::signbit(fa) != std::signbit(fb)) {
      if (++found == k) {
        break;
      }
    }
    a = b;
    fa = fb;
  }

  const double tol = std::max(1e-13, 4.0 * std::numeric_limits<double>::epsilon() * b);
  int iterations = 0;
  while (b - a > tol) {
    if (++iterations > 200) {
      throw NumericalError("bisection did not converge for zero of j_" + std::to_string(l));
    }
    const double mid = 0.5 * (a + b);
    const double fm = sph_bessel_j(l, mid);
    if (fm == 0.0) {
      a = b = mid;
      break;
    }
    if (std::signbit(fm) == std::signbit(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }

  double root = 0.5 * (a + b);
  const double lo = a - tol;
  const double hi = b + tol;
  for (int i = 0; i < 2; ++i) {
    const double d = sph_bessel_j_derivative(l, root);
    if (d == 0.0) {
      break;
    }
    const double next = root - sph_bessel_j(l, root) / d;
    if (next < lo || next > hi) {
      break;
    }
    root = next;
  }
  return root;
}

}  // namespace swell::specfun
