#pragma once

// Classical radial densities of a free particle bouncing specularly inside
// a sphere of unit radius (a = 1, v = 1, time in units a/v).

#include "swell/grid.hpp"
#include "swell/histogram.hpp"
#include "swell/random.hpp"

#include <cstdint>

namespace swell::classical {

// Perpendicular distance from the center to a straight flight, in units of
// the radius. Fixes the angular momentum through sigma = L / (mu v a).
class ImpactParameter {
public:
  explicit ImpactParameter(double sigma);
  double value() const { return sigma_; }

private:
  double sigma_;
};

// One draw of the chord sampler: t is the time from the point of closest
// approach, r = sqrt(t^2 + sigma^2).
struct ChordSample {
  double sigma;
  double t;
  double r;
};

enum class Weighting {
  // sigma density 2 sigma: solid-angle weight divided by sqrt(1 - sigma^2)
  // for the bounce rate. Converges to r ln((1+r)/(1-r)).
  Paper,
  // sigma density 3 sigma sqrt(1 - sigma^2) (uniform position, isotropic
  // velocity). Converges to 3 r^2.
  Liouville,
};

struct McConfig {
  Weighting mode = Weighting::Paper;
  std::uint64_t samples = 1'000'000;
  std::size_t bins = 100;
  std::uint64_t seed = 42;
  double r_max = 1.0;

  void validate() const;
};

// Samples per RNG stream. Block b always uses stream b, which is what makes
// the histogram independent of the thread count.
inline constexpr std::uint64_t kSamplesPerStream = 1u << 16;

/// P_sigma(r) = r / (sqrt(1 - sigma^2) sqrt(r^2 - sigma^2)) for r >= sigma,
/// 0 for r < sigma. Throws DomainError within 1e-15 of the r = sigma pole.
double p_sigma(double r, ImpactParameter sigma);

// 3 sigma sqrt(1 - sigma^2), normalized on [0, 1].
double angular_momentum_weight(ImpactParameter sigma);

/// r ln((1+r)/(1-r)), 0 <= r < 1.
double classical_total_density(double r);

/// 2 int_0^r sigma P_sigma(r) dsigma by quadrature with sigma = r sin(phi),
/// the independent route to classical_total_density. 0 < r < 1.
double classical_total_density_by_quadrature(double r, double tol);

ChordSample draw_chord(Weighting mode, numerics::RandomStream& rng);

// Histogram of radii on `bins` equal cells of [0, r_max].
numerics::Histogram mc_histogram(const McConfig& config, unsigned threads = 1);

/// Monte Carlo estimate of the radial density; requires bins >= 2.
numerics::DensityCurve mc_radial_density(const McConfig& config, unsigned threads = 1);

numerics::DensityCurve classical_total_curve(const numerics::RadialGrid& grid);
// 3 r^2 on the grid.
numerics::DensityCurve liouville_curve(const numerics::RadialGrid& grid);

}  // namespace swell::classical
