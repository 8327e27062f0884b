#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swell::numerics {

// Strictly increasing abscissae in [0, r_max], r in units of the well radius.
// Endpoint grids end exactly at r_max; cell-midpoint grids end half a cell
// short of it.
class RadialGrid {
public:
  RadialGrid(std::vector<double> points, double r_max);

  // count points 0, h, ..., r_max.
  static RadialGrid uniform(std::size_t count, double r_max);
  // Centers of `cells` equal cells covering [0, r_max].
  static RadialGrid midpoints(std::size_t cells, double r_max);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double r_max() const { return r_max_; }

  bool operator==(const RadialGrid&) const = default;

private:
  std::vector<double> points_;
  double r_max_;
};

// Radial probability density sampled on a grid (probability per unit radius).
class DensityCurve {
public:
  DensityCurve(RadialGrid grid, std::vector<double> values);

  const RadialGrid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  // Trapezoidal integral over the grid's own span.
  double trapezoid_mass() const;

private:
  RadialGrid grid_;
  std::vector<double> values_;
};

enum class Metric { L1, Sup };

/// L1: trapezoidal integral of |p - q|. Sup: max |p - q|.
/// Throws GridMismatch unless both curves share the same grid.
double curve_distance(const DensityCurve& p, const DensityCurve& q, Metric metric);

// Pairwise (cascade) summation in index order.
double pairwise_sum(std::span<const double> values);

}  // namespace swell::numerics
