#include "swell/quantum.hpp"

#include "swell/classical.hpp"
#include "swell/errors.hpp"
#include "swell/parallel.hpp"
#include "swell/quadrature.hpp"
#include "swell/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swell::quantum {

namespace {

constexpr double kPi = std::numbers::pi;

void check_level(int n) {
  if (n < 1) {
    throw DomainError("level index n must be positive, got " + std::to_string(n));
  }
}

void check_allowed(int n, int l) {
  check_level(n);
  if (l < 0 || l > allowed_l_max(n)) {
    throw DomainError("l = " + std::to_string(l) + " is not allowed at n = " + std::to_string(n) +
                      " (need l(l+1) <= (n pi)^2)");
  }
}

void check_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("radius must lie in [0, 1], got " + std::to_string(r));
  }
}

double wavenumber(int n) { return n * kPi; }

numerics::DensityCurve sample(const numerics::RadialGrid& grid, auto&& density) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = density(grid[i]);
  }
  return {grid, std::move(values)};
}

// j_l(x)^2 - j_{l-1}(x) j_{l+1}(x) from a table holding orders up to l + 1.
double cross_term(const std::vector<double>& j, int l) {
  const auto i = static_cast<std::size_t>(l);
  return j[i] * j[i] - j[i - 1] * j[i + 1];
}

}  // namespace

StateLabel::StateLabel(int n, int l, int m, Branch branch) : n_(n), l_(l), m_(m), branch_(branch) {
  check_allowed(n, l);
  if (std::abs(m) > l) {
    throw DomainError("|m| must not exceed l");
  }
  if (branch != Branch::J && (l != 0 || m != 0)) {
    throw DomainError("N0, H1 and H2 branches exist only for l = 0, m = 0");
  }
}

int allowed_l_max(int n) {
  check_level(n);
  const long double bound = static_cast<long double>(n) * n * std::numbers::pi_v<long double> *
                            std::numbers::pi_v<long double>;
  auto l = static_cast<std::int64_t>(std::floor((-1.0L + std::sqrt(1.0L + 4.0L * bound)) / 2.0L));
  auto fits = [bound](std::int64_t v) { return static_cast<long double>(v * (v + 1)) <= bound; };
  while (fits(l + 1)) {
    ++l;
  }
  while (l > 0 && !fits(l)) {
    --l;
  }
  return static_cast<int>(l);
}

LevelSpec level_spec(int n) {
  LevelSpec spec;
  spec.n = n;
  spec.k = wavenumber(n);
  spec.energy = 0.5 * spec.k * spec.k;
  spec.l_max = allowed_l_max(n);
  const std::int64_t side = spec.l_max + 1;
  spec.degeneracy = side * side + 1;
  const auto d = static_cast<double>(spec.degeneracy);
  spec.weights.resize(static_cast<std::size_t>(spec.l_max) + 1);
  spec.weights[0] = 2.0 / d;
  for (int l = 1; l <= spec.l_max; ++l) {
    spec.weights[static_cast<std::size_t>(l)] = (2.0 * l + 1.0) / d;
  }
  return spec;
}

double normalization_constant_sq(int n, int l) {
  check_allowed(n, l);
  const double k = wavenumber(n);
  if (l == 0) {
    return 2.0 * k * k;
  }
  const auto j = specfun::sph_bessel_j_all(specfun::BesselOrderRange(l + 1, k));
  return 2.0 / cross_term(j, l);
}

double normalization_constant_sq_by_quadrature(int n, int l) {
  check_allowed(n, l);
  const double k = wavenumber(n);
  const auto integrand = [k, l](double r) {
    const double j = specfun::sph_bessel_j(l, k * r);
    return j * j * r * r;
  };
  // The integral is O(1/k^2); ask for ~1e-13 relative.
  const double mass = numerics::integrate(integrand, 0.0, 1.0, 1e-13 / (k * k));
  if (!(mass > 0.0)) {
    throw NumericalError("normalization integral is not positive");
  }
  return 1.0 / mass;
}

double verified_normalization_constant_sq(int n, int l) {
  const double closed = normalization_constant_sq(n, l);
  const double quad = normalization_constant_sq_by_quadrature(n, l);
  if (std::abs(closed - quad) > 1e-9 * closed) {
    throw NumericalError("normalization of (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                         ") disagrees: closed form " + std::to_string(closed) + ", quadrature " +
                         std::to_string(quad));
  }
  return closed;
}

RadialState make_radial_state(const StateLabel& label) {
  const double k = wavenumber(label.n());
  switch (label.branch()) {
    case Branch::J:
      return {label, normalization_constant_sq(label.n(), label.l())};
    case Branch::N0:
      return {label, 2.0 * k * k};
    case Branch::H1:
    case Branch::H2:
      return {label, k * k};
  }
  throw std::invalid_argument("unknown branch");
}

double state_radial_density_at(const RadialState& state, double r) {
  check_radius(r);
  const auto& label = state.label;
  const double k = wavenumber(label.n());
  const double a2 = state.norm_const_sq;
  switch (label.branch()) {
    case Branch::J: {
      const double j = specfun::sph_bessel_j(label.l(), k * r);
      return a2 * j * j * r * r;
    }
    case Branch::N0: {
      // n_0(kr) r = -cos(kr)/k, finite at the origin.
      const double c = std::cos(k * r) / k;
      return a2 * c * c;
    }
    case Branch::H1:
    case Branch::H2: {
      if (r == 0.0) {
        return a2 / (k * k);
      }
      const auto h = specfun::sph_hankel0(label.branch() == Branch::H1 ? 1 : 2, k * r);
      return a2 * std::norm(h) * r * r;
    }
  }
  throw std::invalid_argument("unknown branch");
}

numerics::DensityCurve state_radial_density(const RadialState& state,
                                            const numerics::RadialGrid& grid) {
  return sample(grid, [&](double r) { return state_radial_density_at(state, r); });
}

double mean_radial_density_at(int n, int l, double r) {
  check_allowed(n, l);
  if (l == 0) {
    const RadialState bessel = make_radial_state(StateLabel(n, 0, 0, Branch::J));
    const RadialState neumann = make_radial_state(StateLabel(n, 0, 0, Branch::N0));
    return 0.5 * (state_radial_density_at(bessel, r) + state_radial_density_at(neumann, r));
  }
  return state_radial_density_at(make_radial_state(StateLabel(n, l, 0, Branch::J)), r);
}

numerics::DensityCurve mean_radial_density(int n, int l, const numerics::RadialGrid& grid) {
  check_allowed(n, l);
  if (l == 0) {
    const RadialState bessel = make_radial_state(StateLabel(n, 0, 0, Branch::J));
    const RadialState neumann = make_radial_state(StateLabel(n, 0, 0, Branch::N0));
    return sample(grid, [&](double r) {
      return 0.5 * (state_radial_density_at(bessel, r) + state_radial_density_at(neumann, r));
    });
  }
  const RadialState state = make_radial_state(StateLabel(n, l, 0, Branch::J));
  return state_radial_density(state, grid);
}

LevelDensity::LevelDensity(int n) : spec_(level_spec(n)) {
  if (spec_.l_max + 1 > specfun::kMaxOrder) {
    throw DomainError("level n = " + std::to_string(n) + " exceeds the Bessel order ceiling");
  }
  const auto j = specfun::sph_bessel_j_all(specfun::BesselOrderRange(spec_.l_max + 1, spec_.k));
  norms_.resize(static_cast<std::size_t>(spec_.l_max) + 1);
  norms_[0] = 2.0 * spec_.k * spec_.k;
  for (int l = 1; l <= spec_.l_max; ++l) {
    norms_[static_cast<std::size_t>(l)] = 2.0 / cross_term(j, l);
  }
}

double LevelDensity::operator()(double r) const {
  check_radius(r);
  const double k = spec_.k;
  const double x = k * r;
  const auto j = specfun::sph_bessel_j_all(specfun::BesselOrderRange(spec_.l_max, x));

  std::vector<double> terms(j.size());
  // l = 0: average of the j_0 and n_0 states, r^2 n_0(kr)^2 = cos^2(kr)/k^2.
  const double c = std::cos(x) / k;
  const double bessel0 = norms_[0] * j[0] * j[0] * r * r;
  const double neumann0 = norms_[0] * c * c;
  terms[0] = spec_.weights[0] * 0.5 * (bessel0 + neumann0);
  for (std::size_t l = 1; l < j.size(); ++l) {
    terms[l] = spec_.weights[l] * norms_[l] * j[l] * j[l] * r * r;
  }
  return numerics::pairwise_sum(terms);
}

numerics::DensityCurve total_radial_density(int n, const numerics::RadialGrid& grid,
                                            unsigned threads) {
  const LevelDensity density(n);
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) { values[i] = density(grid[i]); });
  return {grid, std::move(values)};
}

double centrifugal_expectation(int n, int l) {
  check_allowed(n, l);
  if (l < 1) {
    throw DomainError("centrifugal expectation is defined for l >= 1");
  }
  const double k = wavenumber(n);
  const double a2 = normalization_constant_sq(n, l);
  const double barrier = 0.5 * l * (l + 1.0);
  const auto integrand = [k, l](double r) {
    const double j = specfun::sph_bessel_j(l, k * r);
    return j * j;
  };
  const double integral = numerics::integrate(integrand, 0.0, 1.0, 1e-11 / (barrier * a2));
  return barrier * a2 * integral;
}

namespace {

struct ConventionalState {
  double beta;
  double norm_const_sq;
};

ConventionalState conventional_state(int n_r, int l) {
  if (n_r < 1) {
    throw DomainError("radial quantum number must be positive");
  }
  const double beta = specfun::sph_bessel_zero(l, n_r);
  // With j_l(beta) = 0, j_{l-1}(beta) = -j_{l+1}(beta).
  const double jp = specfun::sph_bessel_j(l + 1, beta);
  return {beta, 2.0 / (jp * jp)};
}

}  // namespace

double conventional_radial_density_at(int n_r, int l, double r) {
  check_radius(r);
  const auto state = conventional_state(n_r, l);
  const double j = specfun::sph_bessel_j(l, state.beta * r);
  return state.norm_const_sq * j * j * r * r;
}

numerics::DensityCurve conventional_radial_density(int n_r, int l,
                                                   const numerics::RadialGrid& grid) {
  const auto state = conventional_state(n_r, l);
  return sample(grid, [&](double r) {
    const double j = specfun::sph_bessel_j(l, state.beta * r);
    return state.norm_const_sq * j * j * r * r;
  });
}

Comparison compare_to_classical(int n, const numerics::RadialGrid& grid, unsigned threads) {
  if (!(grid.points().back() < 1.0)) {
    throw DomainError("comparison grid must stay below r = 1 where the classical density diverges");
  }
  auto quantum = total_radial_density(n, grid, threads);
  auto classical = classical::classical_total_curve(grid);
  const auto spec = level_spec(n);
  ComparisonReport report{
      .n = n,
      .r_max = grid.r_max(),
      .l1_distance = numerics::curve_distance(quantum, classical, numerics::Metric::L1),
      .sup_distance = numerics::curve_distance(quantum, classical, numerics::Metric::Sup),
      .degeneracy = spec.degeneracy,
      .l_max = spec.l_max,
  };
  return {report, std::move(quantum), std::move(classical)};
}

}  // namespace swell::quantum
