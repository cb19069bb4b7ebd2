#pragma once

#include <vector>

namespace xxring {

/// Gauss-Legendre rule on [-1, 1]: nodes ascending, weights summing to 2.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights via Newton iteration on the Legendre recurrence.
/// Deterministic; accurate to ~1e-15 for the orders used here (n <= 128).
GaussLegendreRule gauss_legendre(int n);

}  // namespace xxring
