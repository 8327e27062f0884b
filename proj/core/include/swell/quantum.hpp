#pragma once

// Level structure and radial densities of the infinite spherical well in the
// group-theoretical solution. Units: a = hbar = mu = 1, so k_n = n pi,
// energies are in hbar^2 / (mu a^2) and densities in 1/a.

#include "swell/grid.hpp"

#include <cstdint>
#include <vector>

namespace swell::quantum {

// l = 0 carries a two-dimensional eigenspace, spanned either by {J, N0}
// (j_0 and n_0) or by {H1, H2} (h_0^(1), h_0^(2)). l >= 1 uses J only.
enum class Branch { J, N0, H1, H2 };

struct LevelSpec {
  int n = 0;
  double k = 0.0;       // n pi
  double energy = 0.0;  // (n pi)^2 / 2
  int l_max = 0;
  // w_0 = 2 / D, w_l = (2l + 1) / D
  std::vector<double> weights;
  std::int64_t degeneracy = 0;  // (l_max + 1)^2 + 1
};

class StateLabel {
public:
  StateLabel(int n, int l, int m, Branch branch);

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }
  Branch branch() const { return branch_; }

private:
  int n_;
  int l_;
  int m_;
  Branch branch_;
};

struct RadialState {
  StateLabel label;
  double norm_const_sq;  // A^2, units 1/a^3
};

/// Largest l with l(l+1) <= (n pi)^2.
int allowed_l_max(int n);

LevelSpec level_spec(int n);

/// A^2_{nl} = 2 / (j_l(n pi)^2 - j_{l-1}(n pi) j_{l+1}(n pi)) for l >= 1 and
/// 2 (n pi)^2 for l = 0 (J and N0 branches).
double normalization_constant_sq(int n, int l);

// 1 / int_0^1 j_l(n pi r)^2 r^2 dr by adaptive quadrature.
double normalization_constant_sq_by_quadrature(int n, int l);

// Closed form guarded by quadrature; NumericalError if they differ by more
// than 1e-9 relative.
double verified_normalization_constant_sq(int n, int l);

// Attaches the normalization for the label's branch (n^2 pi^2 for H1/H2).
RadialState make_radial_state(const StateLabel& label);

double state_radial_density_at(const RadialState& state, double r);
numerics::DensityCurve state_radial_density(const RadialState& state,
                                            const numerics::RadialGrid& grid);

/// Mean over the states of one l. For l = 0 this is the equal-weight
/// average of the J and N0 densities, identically 1.
double mean_radial_density_at(int n, int l, double r);
numerics::DensityCurve mean_radial_density(int n, int l, const numerics::RadialGrid& grid);

// Degeneracy-weighted density of level n with all normalizations cached.
class LevelDensity {
public:
  explicit LevelDensity(int n);

  const LevelSpec& spec() const { return spec_; }
  double norm_const_sq(int l) const { return norms_.at(static_cast<std::size_t>(l)); }

  // sum_l w_l mean_l(r), summed pairwise over ascending l.
  double operator()(double r) const;

private:
  LevelSpec spec_;
  std::vector<double> norms_;
};

numerics::DensityCurve total_radial_density(int n, const numerics::RadialGrid& grid,
                                            unsigned threads = 1);

/// <l(l+1) / 2r^2> for the J state (n, l), l >= 1, by quadrature.
double centrifugal_expectation(int n, int l);

// Textbook solution: C^2 j_l(beta r)^2 r^2 with beta the n_r-th zero of j_l.
double conventional_radial_density_at(int n_r, int l, double r);
numerics::DensityCurve conventional_radial_density(int n_r, int l,
                                                   const numerics::RadialGrid& grid);

struct ComparisonReport {
  int n = 0;
  double r_max = 0.0;
  double l1_distance = 0.0;
  double sup_distance = 0.0;
  std::int64_t degeneracy = 0;
  int l_max = 0;
};

struct Comparison {
  ComparisonReport report;
  numerics::DensityCurve quantum;
  numerics::DensityCurve classical;
};

// total_radial_density(n) against r ln((1+r)/(1-r)) on `grid`.
Comparison compare_to_classical(int n, const numerics::RadialGrid& grid, unsigned threads = 1);

}  // namespace swell::quantum
