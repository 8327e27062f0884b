#pragma once

#include <stdexcept>
#include <string>

namespace swell {

// Argument outside the mathematical domain of a function (poles, r >= 1 for
// log-divergent densities, disallowed quantum numbers).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Iteration or subdivision cap hit, or two independent routes disagree.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Two curves or histograms that must share a grid do not.
class GridMismatch : public std::invalid_argument {
public:
  explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace swell
