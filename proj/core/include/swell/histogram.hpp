#pragma once

#include "swell/grid.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace swell::numerics {

struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  // Number of samples offered, in range or not.
  double total_weight = 0.0;

  std::uint64_t accepted() const;
};

// Streaming accumulation into half-open bins [e_i, e_{i+1}).
class HistogramBuilder {
public:
  explicit HistogramBuilder(std::vector<double> bin_edges);

  void add(double sample);
  // Counts from another builder over identical edges.
  void merge(const HistogramBuilder& other);

  std::uint64_t offered() const { return offered_; }
  Histogram finish() const;

private:
  std::vector<double> edges_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t offered_ = 0;
};

/// Throws std::invalid_argument for an empty sample set or edges that are
/// not strictly increasing.
Histogram accumulate_histogram(std::span<const double> samples, std::span<const double> bin_edges);

/// count / (N * width) at each bin midpoint, N = total_weight. Edges must lie
/// in [0, 1].
DensityCurve histogram_density(const Histogram& histogram);

// n + 1 equally spaced edges on [lo, hi].
std::vector<double> uniform_edges(std::size_t bins, double lo, double hi);

}  // namespace swell::numerics
