#include "swell/errors.hpp"
#include "swell/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace swell::numerics {

RadialGrid::RadialGrid(std::vector<double> points, double r_max)
    : points_(std::move(points)), r_max_(r_max) {
  if (!(r_max > 0.0 && r_max <= 1.0)) {
    throw std::invalid_argument("grid r_max must lie in (0, 1]");
  }
  if (points_.size() < 2) {
    throw std::invalid_argument("grid needs at least two points");
  }
  if (!(points_.front() >= 0.0) || !(points_.back() <= r_max)) {
    throw std::invalid_argument("grid points must lie in [0, r_max]");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i] > points_[i - 1])) {
      throw std::invalid_argument("grid points must be strictly increasing");
    }
  }
}

RadialGrid RadialGrid::uniform(std::size_t count, double r_max) {
  if (count < 2) {
    throw std::invalid_argument("uniform grid needs at least two points");
  }
  std::vector<double> points(count);
  const double step = r_max / static_cast<double>(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    points[i] = step * static_cast<double>(i);
  }
  points.back() = r_max;
  return RadialGrid(std::move(points), r_max);
}

RadialGrid RadialGrid::midpoints(std::size_t cells, double r_max) {
  if (cells < 2) {
    throw std::invalid_argument("midpoint grid needs at least two cells");
  }
  std::vector<double> points(cells);
  const double width = r_max / static_cast<double>(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    points[i] = width * (static_cast<double>(i) + 0.5);
  }
  return RadialGrid(std::move(points), r_max);
}

DensityCurve::DensityCurve(RadialGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridMismatch("density has " + std::to_string(values_.size()) + " values for " +
                       std::to_string(grid_.size()) + " grid points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw NumericalError("density value at r = " + std::to_string(grid_[i]) +
                           " is negative or non-finite");
    }
  }
}

double DensityCurve::trapezoid_mass() const {
  double mass = 0.0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    mass += 0.5 * (values_[i] + values_[i - 1]) * (grid_[i] - grid_[i - 1]);
  }
  return mass;
}

double curve_distance(const DensityCurve& p, const DensityCurve& q, Metric metric) {
  if (!(p.grid() == q.grid())) {
    throw GridMismatch("curve_distance requires identical grids");
  }
  const auto& grid = p.grid();
  if (metric == Metric::Sup) {
    double sup = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      sup = std::max(sup, std::abs(p[i] - q[i]));
    }
    return sup;
  }
  double l1 = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double left = std::abs(p[i - 1] - q[i - 1]);
    const double right = std::abs(p[i] - q[i]);
    l1 += 0.5 * (left + right) * (grid[i] - grid[i - 1]);
  }
  return l1;
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 8;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) {
      s += v;
    }
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace swell::numerics
