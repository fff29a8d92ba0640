#include "antilinear/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "antilinear/error.hpp"

namespace antilinear {

namespace {

struct LegendreEval {
  double value;
  double derivative;
};

LegendreEval legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw ValidationError("gauss_legendre: n must be positive");
  if (!(hi > lo)) throw ValidationError("gauss_legendre: empty interval");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    LegendreEval p{};
    for (int iter = 0; iter < 100; ++iter) {
      p = legendre(n, x);
      const double dx = p.value / p.derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    p = legendre(n, x);
    const double w = 2.0 / ((1.0 - x * x) * p.derivative * p.derivative);
    // Newton converges to the i-th largest root; fill from both ends.
    const auto hi_idx = static_cast<std::size_t>(n - 1 - i);
    const auto lo_idx = static_cast<std::size_t>(i);
    rule.nodes[hi_idx] = mid + half * x;
    rule.nodes[lo_idx] = mid - half * x;
    rule.weights[hi_idx] = half * w;
    rule.weights[lo_idx] = half * w;
  }
  return rule;
}

}  // namespace antilinear
