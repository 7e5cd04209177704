#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "polyspec/eigenforms.hpp"
#include "polyspec/quadrature.hpp"

namespace polyspec {

/// Samples of one coefficient function u_J on a tensor quadrature grid:
/// Gauss-Legendre in r_k on [0, a_k] times the periodic trapezoid in theta_k.
/// Samples are row-major over (r_1, theta_1, r_2, theta_2, ..., r_n, theta_n),
/// the last angle varying fastest.
struct SampledGrid {
  std::vector<double> radii;
  FormIndex J;
  std::vector<int> radial_nodes;
  std::vector<int> angular_nodes;
  std::vector<std::complex<double>> samples;

  std::size_t expected_samples() const;
  void validate() const;
};

using CoefficientFunction =
    std::function<std::complex<double>(std::span<const std::complex<double>>)>;

/// Evaluates f at every grid node.
SampledGrid sample_grid(const Polydisc& P, const FormIndex& J,
                        const std::vector<int>& radial_nodes,
                        const std::vector<int>& angular_nodes,
                        const CoefficientFunction& f);

/// Quadrature value of int_P |f|^2 dV.
double squared_norm(const SampledGrid& grid);

struct ExpansionTerm {
  EigenMode mode;  // holomorphic factors carry explicit exponents
  std::complex<double> coefficient;
};

/// u_J = sum c_e e over eigenmodes sharing the form index J.
struct Expansion {
  FormIndex J;
  std::vector<ExpansionTerm> terms;
  double truncation_lambda = 0.0;
  int holomorphic_max_exponent = 0;
};

struct ExpandConfig {
  int radial_nodes = 64;
  /// 0 picks 2 (max angular order + 1), at least 16.
  int angular_nodes = 0;
  /// The holomorphic families {z^p} are materialized for p <= this.
  int holomorphic_max_exponent = 16;
};

/// int_P |e|^2 dV from closed-form radial norms.
double mode_norm_squared(const EigenMode& mode, const EvalConfig& cfg = {});

/// Eigenmodes with form index J and value <= truncation_lambda, holomorphic
/// exponents expanded up to p_max. Sorted by mode_less.
std::vector<EigenMode> expansion_basis(const Polydisc& P, const FormIndex& J,
                                       double truncation_lambda, int p_max,
                                       ZeroCache& cache);

/// Coefficients <f, e> / <e, e> by tensor quadrature on the grid.
Expansion expand(const SampledGrid& grid, double truncation_lambda, int p_max,
                 ZeroCache& cache);

/// Samples f on a grid sized by cfg and expands it.
Expansion expand(const Polydisc& P, const CoefficientFunction& f, const FormIndex& J,
                 double truncation_lambda, ZeroCache& cache, ExpandConfig cfg = {});

/// Divides every coefficient by its eigenvalue.
Expansion apply_inverse(const Expansion& x);

/// Multiplies every coefficient by its eigenvalue.
Expansion apply_box(const Expansion& x);

/// sum_e c_e e(p).
std::complex<double> synthesize(const Expansion& x, const FormPoint& p,
                                const EvalConfig& cfg = {});

/// sqrt(sum |c_e|^2).
double coefficient_norm(const Expansion& x);

/// sqrt(sum |c_e|^2 ||e||^2), the L^2 norm of the synthesized function.
double l2_norm(const Expansion& x);

}  // namespace polyspec
