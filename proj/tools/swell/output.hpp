#pragma once

#include "swell/grid.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace swell::cli {

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// 17 significant digits, enough to round-trip binary64.
std::string format_fixed17(double value);
// Shortest representation that round-trips.
std::string format_shortest(double value);

// Writes to `path.tmp` then renames over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

// "r,density" with one row per grid point.
std::string curve_csv(const numerics::DensityCurve& curve);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// 800x600 line plot, one polyline per series.
std::string svg_plot(const std::string& title, const std::vector<Series>& series);

Series to_series(const std::string& label, const numerics::DensityCurve& curve);

}  // namespace swell::cli
