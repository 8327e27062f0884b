#include "swell/errors.hpp"
#include "swell/histogram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swell::numerics {

std::uint64_t Histogram::accepted() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

HistogramBuilder::HistogramBuilder(std::vector<double> bin_edges) : edges_(std::move(bin_edges)) {
  if (edges_.size() < 2) {
    throw std::invalid_argument("histogram needs at least two bin edges");
  }
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (!(edges_[i] > edges_[i - 1])) {
      throw std::invalid_argument("histogram bin edges must be strictly increasing");
    }
  }
  counts_.assign(edges_.size() - 1, 0);
}

void HistogramBuilder::add(double sample) {
  ++offered_;
  if (!(sample >= edges_.front() && sample < edges_.back())) {
    return;
  }
  // First edge strictly greater than the sample closes its bin.
  const auto upper = std::upper_bound(edges_.begin(), edges_.end(), sample);
  ++counts_[static_cast<std::size_t>(upper - edges_.begin()) - 1];
}

void HistogramBuilder::merge(const HistogramBuilder& other) {
  if (other.edges_ != edges_) {
    throw GridMismatch("cannot merge histograms with different bin edges");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
  }
  offered_ += other.offered_;
}

Histogram HistogramBuilder::finish() const {
  if (offered_ == 0) {
    throw std::invalid_argument("histogram of an empty sample set");
  }
  return {edges_, counts_, static_cast<double>(offered_)};
}

Histogram accumulate_histogram(std::span<const double> samples, std::span<const double> bin_edges) {
  if (samples.empty()) {
    throw std::invalid_argument("histogram of an empty sample set");
  }
  HistogramBuilder builder(std::vector<double>(bin_edges.begin(), bin_edges.end()));
  for (double s : samples) {
    builder.add(s);
  }
  return builder.finish();
}

DensityCurve histogram_density(const Histogram& histogram) {
  const auto& edges = histogram.bin_edges;
  if (edges.size() < 3) {
    throw std::invalid_argument("density conversion needs at least two bins");
  }
  if (edges.front() < 0.0 || edges.back() > 1.0) {
    throw std::invalid_argument("density conversion needs bin edges inside [0, 1]");
  }
  std::vector<double> mids(histogram.counts.size());
  std::vector<double> values(histogram.counts.size());
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    const double width = edges[i + 1] - edges[i];
    mids[i] = 0.5 * (edges[i] + edges[i + 1]);
    values[i] = static_cast<double>(histogram.counts[i]) / (histogram.total_weight * width);
  }
  return DensityCurve(RadialGrid(std::move(mids), edges.back()), std::move(values));
}

std::vector<double> uniform_edges(std::size_t bins, double lo, double hi) {
  if (bins < 1 || !(hi > lo)) {
    throw std::invalid_argument("uniform_edges needs bins >= 1 and hi > lo");
  }
  std::vector<double> edges(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    edges[i] = lo + width * static_cast<double>(i);
  }
  edges.back() = hi;
  return edges;
}

}  // namespace swell::numerics
