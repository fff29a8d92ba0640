#pragma once

#include <vector>

namespace antilinear {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi], nodes by Newton iteration on the
/// Legendre three-term recurrence.
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

}  // namespace antilinear
