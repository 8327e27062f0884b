#pragma once

#include <functional>

namespace swell::numerics {

// Known endpoint behaviour of an integrand; selects a change of variables
// that removes it before adaptive subdivision.
enum class Endpoint {
  Smooth,
  // f ~ (x - a)^{-1/2} near a: x = a + (b - a) s^2.
  InverseSqrtLower,
  // f ~ log(b - x) near b: x = b - (b - a) e^{-u}, truncated at
  // (b - a) e^{-u} = 1e-12.
  LogUpper,
};

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
///
/// Bisects the panel with the largest |K15 - G7| estimate until the summed
/// estimate drops below max(tol, 50 eps |I|). Throws NumericalError when a
/// panel would be split past 60 levels or a value is non-finite.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 Endpoint endpoint = Endpoint::Smooth);

}  // namespace swell::numerics
