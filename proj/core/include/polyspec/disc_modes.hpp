#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "polyspec/zeros.hpp"

namespace polyspec {

enum class FactorKind { Dirichlet, NeumannPositive, Holomorphic };

std::string_view to_string(FactorKind kind);

/// One separated mode on a disc |z| < radius, in polar form R(r) e^{i m theta}.
///
///   Dirichlet:       R = J_{|m|}(lambda_{|m|,j} r / a),   lambda_k = (lambda_{|m|,j}/a)^2
///   NeumannPositive: R = J_m(lambda_{|m+1|,j} r / a),     lambda_k = (lambda_{|m+1|,j}/a)^2
///   Holomorphic:     R = r^p, m = p >= 0,                 lambda_k = 0
///
/// Two factors denote the same mode iff kind, angular_order and radial_index
/// agree; equal lambda_k alone does not identify a mode.
struct ModeFactor {
  FactorKind kind = FactorKind::Holomorphic;
  int angular_order = 0;
  int radial_index = 0;  // 0 for Holomorphic
  double radius = 1.0;
  double bessel_zero = 0.0;  // the zero of J used to scale r; 0 for Holomorphic
  double lambda_k = 0.0;

  static ModeFactor dirichlet(int m, int j, double radius, ZeroCache& cache);
  static ModeFactor neumann(int m, int j, double radius, ZeroCache& cache);
  static ModeFactor holomorphic(int p, double radius);

  /// Order of the Bessel function whose zero sets lambda_k.
  int zero_order() const;

  bool same_mode(const ModeFactor& other) const {
    return kind == other.kind && angular_order == other.angular_order &&
           radial_index == other.radial_index;
  }
};

/// Total order on (kind, angular_order, radial_index).
std::strong_ordering compare_identity(const ModeFactor& a, const ModeFactor& b);

/// All Dirichlet factors with lambda_k <= lambda_max; +m and -m are distinct.
/// Sorted by (lambda_k, angular_order, radial_index).
std::vector<ModeFactor> dirichlet_factors(double radius, double lambda_max,
                                          ZeroCache& cache);

/// All NeumannPositive factors with lambda_k <= lambda_max. The lambda_k = 0
/// holomorphic modes are not included. Same ordering as dirichlet_factors.
std::vector<ModeFactor> neumann_factors(double radius, double lambda_max,
                                        ZeroCache& cache);

/// |sqrt(lambda) a J'_m(sqrt(lambda) a) - m J_m(sqrt(lambda) a)|, the radial
/// Robin condition a S'(a) = m S(a) evaluated at the factor's eigenvalue.
double robin_residual(const ModeFactor& f, const EvalConfig& cfg = {});

/// R(r) for 0 <= r <= radius.
double radial_profile(const ModeFactor& f, double r, const EvalConfig& cfg = {});

/// R'(r), analytic.
double radial_derivative(const ModeFactor& f, double r, const EvalConfig& cfg = {});

/// R''(r), analytic (derivative recurrence applied twice for Bessel profiles).
double radial_second_derivative(const ModeFactor& f, double r,
                                const EvalConfig& cfg = {});

}  // namespace polyspec
