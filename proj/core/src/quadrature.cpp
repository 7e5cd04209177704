#include "polyspec/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "polyspec/errors.hpp"

namespace polyspec {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) {
    throw InvalidArgument("gauss_legendre: need at least one node");
  }
  QuadratureRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const int pairs = (n + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    // Tricomi's initial guess for the i-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p0 = 1.0;
        p1 = x;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo_i = static_cast<std::size_t>(i);
    const auto hi_i = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo_i] = mid - half * x;
    rule.nodes[hi_i] = mid + half * x;
    rule.weights[lo_i] = half * w;
    rule.weights[hi_i] = half * w;
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int n) {
  if (n < 1) {
    throw InvalidArgument("periodic_trapezoid: need at least one node");
  }
  QuadratureRule rule;
  const double h = 2.0 * std::numbers::pi / n;
  for (int l = 0; l < n; ++l) {
    rule.nodes.push_back(l * h);
    rule.weights.push_back(h);
  }
  return rule;
}

}  // namespace polyspec
