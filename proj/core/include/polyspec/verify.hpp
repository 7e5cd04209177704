#pragma once

// Independent checks: a finite-difference radial solver, quadrature
// orthogonality, a brute-force spectrum enumerator, and named suites that
// bundle them for the command-line `verify` command.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyspec/spectrum.hpp"

namespace polyspec::verify {

enum class RadialBoundary { Dirichlet, DbarNeumann };

std::string_view to_string(RadialBoundary bc);

struct FdConfig {
  int grid_points = 2000;
  double radius = 1.0;
  int angular_order = 0;
  RadialBoundary bc = RadialBoundary::Dirichlet;

  void validate() const;
};

/// Smallest `count` eigenvalues of -(1/r)(r S')' + (m^2/r^2) S = lambda S on
/// (0, a), regular at the origin, with S(a) = 0 or a S'(a) = m S(a).
///
/// Cell-centred grid r_i = (i - 1/2) h, so the flux through r = 0 vanishes
/// without a one-sided stencil. The outer condition uses a second-order ghost
/// point. After scaling by sqrt(r_i) the matrix is symmetric tridiagonal and
/// its eigenvalues are isolated by Sturm-sequence bisection.
std::vector<double> fd_radial_eigs(const FdConfig& cfg, int count);

struct FdConvergence {
  std::vector<int> grids;
  std::vector<double> values;  // one per grid
  double reference = 0.0;
  double observed_order = 0.0;  // least-squares slope of -log|err| vs log N
  double extrapolated = 0.0;    // Richardson from the two finest grids
};

/// Convergence study of the index-th eigenvalue (0-based) against `reference`.
/// observed_order is NaN when every error is exactly zero.
FdConvergence fd_convergence(FdConfig cfg, int index, double reference,
                             const std::vector<int>& grids);

/// int_0^1 r J_m(lambda_{m,j} r) J_m(lambda_{m,k} r) dr by Gauss-Legendre.
double quad_inner_product(int m, int j, int k, ZeroCache& cache, int nodes = 256);

/// Kind, angular order and radial index per variable plus the form index;
/// built without reference to EigenMode so the brute-force oracle stays
/// independent of the enumerator.
struct ModeDescriptor {
  std::vector<std::size_t> J;
  std::vector<FactorKind> kinds;
  std::vector<int> orders;
  std::vector<int> indices;

  auto operator<=>(const ModeDescriptor&) const = default;
  std::string to_string() const;
};

ModeDescriptor describe(const EigenMode& mode);

struct OracleMode {
  double value = 0.0;
  ModeDescriptor descriptor;
};

struct BruteForceResult {
  std::vector<OracleMode> modes;  // sorted by (value, descriptor)
  /// Smallest single-variable eigenvalue left out by the bounds, over all
  /// variables; always above 4 lambda_max on success.
  double smallest_excluded = 0.0;
};

/// Exhaustive nested loops over every factor with |m| <= m_bound and
/// j <= j_bound, for n = 2 or 3. Throws OracleInsufficient when the bounds
/// could hide a contributing factor.
BruteForceResult brute_force_spectrum(const Polydisc& P, int q, double lambda_max,
                                      int m_bound, int j_bound, ZeroCache& cache);

struct Check {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, ZeroCache& cache);

}  // namespace polyspec::verify
