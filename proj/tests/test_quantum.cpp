#include <doctest.h>

#include "oracles.hpp"
#include "swell/errors.hpp"
#include "swell/quadrature.hpp"
#include "swell/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace swell::quantum;
using swell::numerics::integrate;
using swell::numerics::RadialGrid;
using std::numbers::pi;

TEST_CASE("allowed_l_max") {
  CHECK(allowed_l_max(1) == 2);
  CHECK(allowed_l_max(2) == 5);
  CHECK(allowed_l_max(10) == 30);
  for (int n = 1; n <= 20; ++n) {
    CHECK(allowed_l_max(n) == oracle::brute_l_max(n));
  }
  for (int n = 21; n <= 3000; n += 37) {
    CHECK(allowed_l_max(n) == oracle::brute_l_max(n));
  }
  CHECK_THROWS_AS(allowed_l_max(0), swell::DomainError);
}

TEST_CASE("level_spec") {
  const auto one = level_spec(1);
  CHECK(one.l_max == 2);
  CHECK(one.degeneracy == 10);
  CHECK(one.weights == std::vector<double>{2.0 / 10, 3.0 / 10, 5.0 / 10});
  CHECK(one.energy == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(one.k == doctest::Approx(pi).epsilon(1e-15));

  const auto two = level_spec(2);
  CHECK(two.degeneracy == 37);
  CHECK(two.weights[0] == 2.0 / 37);

  for (int n = 1; n <= 100; ++n) {
    const auto spec = level_spec(n);
    // Integer state count: 2 for l = 0, 2l + 1 otherwise.
    std::int64_t states = 2;
    for (int l = 1; l <= spec.l_max; ++l) {
      states += 2 * l + 1;
    }
    CHECK(states == spec.degeneracy);
    double sum = 0.0;
    for (double w : spec.weights) {
      sum += w;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-15);
  }
}

TEST_CASE("state labels") {
  CHECK_NOTHROW(StateLabel(1, 2, -2, Branch::J));
  CHECK_THROWS_AS(StateLabel(1, 3, 0, Branch::J), swell::DomainError);
  CHECK_THROWS_AS(StateLabel(1, 1, 2, Branch::J), swell::DomainError);
  CHECK_THROWS_AS(StateLabel(1, 1, 0, Branch::N0), swell::DomainError);
  CHECK_THROWS_AS(StateLabel(0, 0, 0, Branch::J), swell::DomainError);
}

TEST_CASE("normalization constants") {
  CHECK(normalization_constant_sq(1, 1) == doctest::Approx(2 * pi * pi).epsilon(1e-13));
  CHECK(normalization_constant_sq(1, 2) ==
        doctest::Approx(2 * std::pow(pi, 4) / (pi * pi - 6)).epsilon(1e-13));
  CHECK(normalization_constant_sq(1, 0) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  CHECK(normalization_constant_sq(3, 0) == doctest::Approx(18 * pi * pi).epsilon(1e-15));

  for (int n : {1, 2, 5, 10}) {
    for (int l = 0; l <= allowed_l_max(n); ++l) {
      const double closed = normalization_constant_sq(n, l);
      const double quad = normalization_constant_sq_by_quadrature(n, l);
      CAPTURE(n);
      CAPTURE(l);
      CHECK(std::abs(closed - quad) / closed < 1e-9);
    }
  }
  CHECK_NOTHROW(verified_normalization_constant_sq(10, 30));
  CHECK_THROWS_AS(normalization_constant_sq(1, 3), swell::DomainError);
}

TEST_CASE("state densities") {
  const auto bessel = make_radial_state(StateLabel(1, 0, 0, Branch::J));
  const auto neumann = make_radial_state(StateLabel(1, 0, 0, Branch::N0));
  const auto h1 = make_radial_state(StateLabel(1, 0, 0, Branch::H1));
  const auto h2 = make_radial_state(StateLabel(1, 0, 0, Branch::H2));

  CHECK(state_radial_density_at(bessel, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(state_radial_density_at(neumann, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(state_radial_density_at(neumann, 1e-9) == doctest::Approx(2.0).epsilon(1e-12));
  for (double r = 0.0; r <= 1.0; r += 0.0625) {
    CHECK(state_radial_density_at(bessel, r) ==
          doctest::Approx(2 * std::sin(pi * r) * std::sin(pi * r)).epsilon(1e-13));
    CHECK(state_radial_density_at(neumann, r) ==
          doctest::Approx(2 * std::cos(pi * r) * std::cos(pi * r)).epsilon(1e-13));
    CHECK(std::abs(state_radial_density_at(h1, r) - 1.0) < 1e-14);
    CHECK(std::abs(state_radial_density_at(h2, r) - 1.0) < 1e-14);
    // Both l = 0 bases average to the same density.
    const double jn = 0.5 * (state_radial_density_at(bessel, r) + state_radial_density_at(neumann, r));
    const double hh = 0.5 * (state_radial_density_at(h1, r) + state_radial_density_at(h2, r));
    CHECK(std::abs(jn - hh) < 1e-14);
  }
  CHECK(h1.norm_const_sq == doctest::Approx(pi * pi));

  for (const auto& label : {StateLabel(1, 0, 0, Branch::J), StateLabel(1, 0, 0, Branch::N0),
                            StateLabel(1, 0, 0, Branch::H1), StateLabel(3, 0, 0, Branch::H2),
                            StateLabel(1, 1, 1, Branch::J), StateLabel(1, 2, -1, Branch::J),
                            StateLabel(4, 9, 3, Branch::J)}) {
    const auto state = make_radial_state(label);
    const double mass = integrate([&](double r) { return state_radial_density_at(state, r); },
                                  0.0, 1.0, 1e-12);
    CHECK(std::abs(mass - 1.0) < 1e-9);
  }
}

TEST_CASE("mean densities") {
  const auto grid = RadialGrid::uniform(1000, 1.0);
  for (int n : {1, 5, 10}) {
    const auto curve = mean_radial_density(n, 0, grid);
    double worst = 0.0;
    for (double v : curve.values()) {
      worst = std::max(worst, std::abs(v - 1.0));
    }
    CHECK(worst < 1e-12);
  }
  CHECK(mean_radial_density_at(1, 2, 1.0) == doctest::Approx(18 / (pi * pi - 6)).epsilon(1e-12));
  CHECK(mean_radial_density_at(1, 1, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(mean_radial_density_at(1, 3, 0.5), swell::DomainError);

  for (int n : {1, 2, 5}) {
    for (int l = 0; l <= allowed_l_max(n); ++l) {
      const double mass = integrate([=](double r) { return mean_radial_density_at(n, l, r); },
                                    0.0, 1.0, 1e-11);
      CAPTURE(n);
      CAPTURE(l);
      CHECK(std::abs(mass - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("total density of level 1 against closed forms") {
  const double a12 = 2 * std::pow(pi, 4) / (pi * pi - 6);
  const LevelDensity level(1);
  for (double r = 0.01; r < 1.0; r += 0.03) {
    const double x = pi * r;
    const double expected = 0.2 + 0.3 * 2 * pi * pi * std::pow(oracle::j1(x) * r, 2) +
                            0.5 * a12 * std::pow(oracle::j2(x) * r, 2);
    CHECK(level(r) == doctest::Approx(expected).epsilon(1e-11));
  }
  CHECK(level(0.0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(level(0.999) == doctest::Approx(3.12100991223159304).epsilon(1e-12));
  CHECK(level(0.999) > 1.0);
}

TEST_CASE("total density is the weighted sum of mean densities and has unit mass") {
  for (int n : {1, 3, 7}) {
    const LevelDensity level(n);
    const auto& spec = level.spec();
    for (double r : {0.0, 0.13, 0.5, 0.91, 1.0}) {
      double sum = 0.0;
      for (int l = 0; l <= spec.l_max; ++l) {
        sum += spec.weights[static_cast<std::size_t>(l)] * mean_radial_density_at(n, l, r);
      }
      CHECK(level(r) == doctest::Approx(sum).epsilon(1e-12));
    }
  }
  for (int n : {1, 2, 10, 40}) {
    const LevelDensity level(n);
    const double mass = integrate([&](double r) { return level(r); }, 0.0, 1.0, 1e-11);
    CAPTURE(n);
    CHECK(std::abs(mass - 1.0) < 1e-8);
  }
}

TEST_CASE("total density curve does not depend on the thread count") {
  const auto grid = RadialGrid::uniform(257, 0.99);
  const auto one = total_radial_density(60, grid, 1);
  const auto four = total_radial_density(60, grid, 4);
  CHECK(std::equal(one.values().begin(), one.values().end(), four.values().begin()));
}

TEST_CASE("centrifugal expectation") {
  // 30-digit references from an independent quadrature.
  CHECK(centrifugal_expectation(1, 1) == doctest::Approx(2.30350304883670126905).epsilon(1e-10));
  CHECK(centrifugal_expectation(1, 2) == doctest::Approx(4.72370498783947879620).epsilon(1e-10));
  CHECK(centrifugal_expectation(2, 3) == doctest::Approx(11.8896506928221466318).epsilon(1e-10));
  CHECK(centrifugal_expectation(3, 8) == doctest::Approx(44.2593807382352605903).epsilon(1e-10));
  // The upper bound (n pi)^2 / 2 = 493.48 does not hold here: j_30(10 pi r)
  // does not vanish at r = 1.
  CHECK(centrifugal_expectation(10, 30) == doctest::Approx(505.556220133719805962).epsilon(1e-10));

  for (int n : {1, 2, 3, 10}) {
    for (int l = 1; l <= allowed_l_max(n); ++l) {
      CHECK(centrifugal_expectation(n, l) >= 0.5 * l * (l + 1));
    }
  }
  CHECK_THROWS_AS(centrifugal_expectation(1, 0), swell::DomainError);
  CHECK_THROWS_AS(centrifugal_expectation(1, 3), swell::DomainError);
}

TEST_CASE("conventional solution vanishes at the boundary") {
  for (double r = 0.0; r < 1.0; r += 0.05) {
    CHECK(conventional_radial_density_at(1, 0, r) ==
          doctest::Approx(2 * std::sin(pi * r) * std::sin(pi * r)).epsilon(1e-12));
  }
  CHECK(conventional_radial_density_at(1, 0, 1.0) < 1e-25);
  CHECK(conventional_radial_density_at(1, 0, 0.999) ==
        doctest::Approx(1.97391438628701513e-5).epsilon(1e-9));
  CHECK(conventional_radial_density_at(1, 1, 1.0) < 1e-25);
  CHECK(conventional_radial_density_at(2, 3, 1.0) < 1e-25);

  for (auto [n_r, l] : {std::pair{1, 0}, {1, 1}, {2, 3}, {4, 2}}) {
    const double mass = integrate([=](double r) { return conventional_radial_density_at(n_r, l, r); },
                                  0.0, 1.0, 1e-12);
    CHECK(std::abs(mass - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(conventional_radial_density_at(0, 0, 0.5), swell::DomainError);
}

TEST_CASE("comparison against the classical density") {
  const auto grid = RadialGrid::uniform(1000, 0.99);
  const auto cmp = compare_to_classical(1, grid);
  CHECK(cmp.report.n == 1);
  CHECK(cmp.report.l_max == 2);
  CHECK(cmp.report.degeneracy == 10);
  CHECK(cmp.report.r_max == 0.99);
  CHECK(cmp.report.l1_distance > 0.0);
  CHECK(cmp.report.sup_distance >= cmp.report.l1_distance);

  const auto later = compare_to_classical(10, grid);
  CHECK(later.report.l1_distance < cmp.report.l1_distance);

  CHECK_THROWS_AS(compare_to_classical(1, RadialGrid::uniform(10, 1.0)), swell::DomainError);
}
