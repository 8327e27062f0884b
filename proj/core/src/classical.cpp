#include "swell/classical.hpp"
#include "swell/errors.hpp"
#include "swell/parallel.hpp"
#include "swell/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swell::classical {

ImpactParameter::ImpactParameter(double sigma) : sigma_(sigma) {
  if (!(sigma >= 0.0 && sigma < 1.0)) {
    throw DomainError("impact parameter must lie in [0, 1), got " + std::to_string(sigma));
  }
}

void McConfig::validate() const {
  if (samples < 1) {
    throw std::invalid_argument("Monte Carlo needs at least one sample");
  }
  if (bins < 1) {
    throw std::invalid_argument("Monte Carlo needs at least one bin");
  }
  if (!(r_max > 0.0 && r_max <= 1.0)) {
    throw std::invalid_argument("Monte Carlo r_max must lie in (0, 1]");
  }
}

double p_sigma(double r, ImpactParameter sigma) {
  const double s = sigma.value();
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("p_sigma needs 0 <= r <= 1");
  }
  if (std::abs(r - s) < 1e-15) {
    throw DomainError("p_sigma is singular at r = sigma");
  }
  if (r < s) {
    return 0.0;
  }
  return r / (std::sqrt((1.0 - s) * (1.0 + s)) * std::sqrt((r - s) * (r + s)));
}

double angular_momentum_weight(ImpactParameter sigma) {
  const double s = sigma.value();
  return 3.0 * s * std::sqrt((1.0 - s) * (1.0 + s));
}

double classical_total_density(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("classical total density needs 0 <= r < 1, got " + std::to_string(r));
  }
  // ln((1+r)/(1-r)) = 2 atanh(r)
  return 2.0 * r * std::atanh(r);
}

double classical_total_density_by_quadrature(double r, double tol) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("quadrature route needs 0 < r < 1, got " + std::to_string(r));
  }
  // sigma = r sin(phi) turns dsigma / sqrt(r^2 - sigma^2) into dphi.
  const auto integrand = [r](double phi) {
    const double s = r * std::sin(phi);
    return 2.0 * s * r / std::sqrt((1.0 - s) * (1.0 + s));
  };
  return numerics::integrate(integrand, 0.0, 0.5 * std::numbers::pi, tol);
}

ChordSample draw_chord(Weighting mode, numerics::RandomStream& rng) {
  const double u = rng.next_uniform();
  const double v = rng.next_uniform();
  double sigma = 0.0;
  switch (mode) {
    case Weighting::Paper:
      sigma = std::sqrt(u);
      break;
    case Weighting::Liouville:
      // CDF 1 - (1 - sigma^2)^{3/2}
      sigma = std::sqrt(1.0 - std::cbrt((1.0 - u) * (1.0 - u)));
      break;
  }
  const double t = v * std::sqrt((1.0 - sigma) * (1.0 + sigma));
  return {sigma, t, std::sqrt(t * t + sigma * sigma)};
}

numerics::Histogram mc_histogram(const McConfig& config, unsigned threads) {
  config.validate();
  const auto edges = numerics::uniform_edges(config.bins, 0.0, config.r_max);
  const std::uint64_t blocks = (config.samples + kSamplesPerStream - 1) / kSamplesPerStream;

  std::vector<numerics::RandomStream> streams;
  streams.reserve(blocks);
  streams.emplace_back(config.seed);
  for (std::uint64_t b = 1; b < blocks; ++b) {
    streams.push_back(streams.back().next_stream());
  }

  std::vector<numerics::HistogramBuilder> partial(blocks, numerics::HistogramBuilder(edges));
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::uint64_t begin = b * kSamplesPerStream;
    const std::uint64_t end = std::min(config.samples, begin + kSamplesPerStream);
    auto rng = streams[b];
    auto& hist = partial[b];
    for (std::uint64_t i = begin; i < end; ++i) {
      hist.add(draw_chord(config.mode, rng).r);
    }
  });

  numerics::HistogramBuilder total(edges);
  for (const auto& h : partial) {
    total.merge(h);
  }
  return total.finish();
}

numerics::DensityCurve mc_radial_density(const McConfig& config, unsigned threads) {
  if (config.bins < 2) {
    throw std::invalid_argument("a density curve needs at least two bins");
  }
  return numerics::histogram_density(mc_histogram(config, threads));
}

numerics::DensityCurve classical_total_curve(const numerics::RadialGrid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = classical_total_density(grid[i]);
  }
  return {grid, std::move(values)};
}

numerics::DensityCurve liouville_curve(const numerics::RadialGrid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = 3.0 * grid[i] * grid[i];
  }
  return {grid, std::move(values)};
}

}  // namespace swell::classical
