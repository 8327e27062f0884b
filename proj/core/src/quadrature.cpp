#include "swell/errors.hpp"
#include "swell/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace swell::numerics {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK qk15). Odd-indexed Kronrod
// nodes are the Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxDepth = 60;
constexpr std::size_t kMaxPanels = 1u << 20;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(const Panel& other) const { return error < other.error; }
};

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NumericalError("integrand is not finite at x = " + std::to_string(x));
  }
  return v;
}

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = checked(f, center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * pair;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

double adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod(f, a, b, 0));
  double total = panels.top().value;
  double total_error = panels.top().error;

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  while (total_error > std::max(tol, 50.0 * kEps * std::abs(total))) {
    const Panel worst = panels.top();
    if (worst.depth >= kMaxDepth || panels.size() >= kMaxPanels) {
      throw NumericalError("adaptive quadrature did not converge on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "]");
    }
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the running totals.
  double sum = 0.0;
  double compensation = 0.0;
  while (!panels.empty()) {
    const double y = panels.top().value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    panels.pop();
  }
  return sum;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 Endpoint endpoint) {
  if (!(a < b)) {
    throw std::invalid_argument("integrate requires a < b");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate requires a positive tolerance");
  }

  const double width = b - a;
  switch (endpoint) {
    case Endpoint::Smooth:
      return adaptive(f, a, b, tol);
    case Endpoint::InverseSqrtLower:
      return adaptive([&](double s) { return f(a + width * s * s) * 2.0 * width * s; }, 0.0, 1.0,
                      tol);
    case Endpoint::LogUpper: {
      const double u_max = std::log(width / 1e-12);
      if (u_max <= 0.0) {
        return adaptive(f, a, b, tol);
      }
      return adaptive(
          [&](double u) {
            const double gap = width * std::exp(-u);
            return f(b - gap) * gap;
          },
          0.0, u_max, tol);
    }
  }
  throw std::invalid_argument("unknown endpoint behaviour");
}

}  // namespace swell::numerics
