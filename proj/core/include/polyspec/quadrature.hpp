#pragma once

#include <vector>

namespace polyspec {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi], nodes ascending.
QuadratureRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

/// n-point trapezoid rule on the circle [0, 2 pi): theta_l = 2 pi l / n.
QuadratureRule periodic_trapezoid(int n);

}  // namespace polyspec
