#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "polyspec/disc_modes.hpp"

namespace polyspec {

/// P(a_1, ..., a_n) = { |z_k| < a_k }, n >= 2.
class Polydisc {
 public:
  explicit Polydisc(std::vector<double> radii);

  std::size_t dimension() const { return radii_.size(); }
  double radius(std::size_t k) const { return radii_.at(k); }
  const std::vector<double>& radii() const { return radii_; }

  /// Throws InvalidArgument unless 1 <= q <= n - 1.
  void check_degree(int q) const;

 private:
  std::vector<double> radii_;
};

/// Strictly increasing variable indices (0-based) of dz-bar_J.
using FormIndex = std::vector<std::size_t>;

/// All strictly increasing q-tuples from {0, ..., n-1}, lexicographic.
std::vector<FormIndex> form_indices(std::size_t n, int q);

/// How the variables outside J are populated.
enum class ModeFamily {
  PureHolomorphic,  // every k outside J holomorphic: infinite-multiplicity family
  PureNeumann,      // every k outside J carries a positive Neumann eigenvalue
  Mixed,
};

std::string_view to_string(ModeFamily family);

/// A product eigenform u = prod_k R_k(r_k) e^{i m_k theta_k} dz-bar_J.
struct EigenMode {
  FormIndex J;
  std::vector<ModeFactor> factors;  // one per variable
  double value = 0.0;

  bool in_form_index(std::size_t k) const;
  bool has_holomorphic_factor() const;
  ModeFamily family() const;
};

/// (1/4) sum_k lambda_k, summed in variable order.
double eigenvalue(const EigenMode& mode);

/// Checks the per-variable boundary kinds against J and that value matches.
void validate(const EigenMode& mode);

/// Deterministic total order on modes: value, then J, then factor identities.
bool mode_less(const EigenMode& a, const EigenMode& b);

struct EnumerateOptions {
  /// Worker threads for the per-J fan-out; results are identical for any value.
  unsigned threads = 1;
};

/// Every eigenmode with value <= lambda_max. Holomorphic factors appear once
/// with exponent 0 and stand for the whole family {z^p : p >= 0}. Sorted by
/// mode_less.
std::vector<EigenMode> enumerate_modes(const Polydisc& P, int q, double lambda_max,
                                       ZeroCache& cache, EnumerateOptions opts = {});

struct SpectralPoint {
  double value = 0.0;
  std::size_t finite_multiplicity = 0;
  bool infinite = false;
  std::size_t mode_count = 0;  // every enumerated mode in the group
  std::vector<EigenMode> witnesses;

  std::vector<ModeFamily> families() const;
};

struct SpectrumOptions {
  /// Relative: consecutive values v1 <= v2 merge when v2 - v1 <= group_tol * v2.
  double group_tol = 1e-11;
  std::size_t max_witnesses = 8;
  EnumerateOptions enumerate;
};

/// Groups the modes of enumerate_modes by value. Ascending.
std::vector<SpectralPoint> assemble_spectrum(const Polydisc& P, int q, double lambda_max,
                                             ZeroCache& cache, SpectrumOptions opts = {});

std::vector<SpectralPoint> group_modes(const std::vector<EigenMode>& modes,
                                       const SpectrumOptions& opts);

struct Bottom {
  double value = 0.0;
  FormIndex J;
};

/// (lambda_{0,1}^2 / 4) min_{|J|=q} sum_{k in J} a_k^{-2}; ties resolve to the
/// lexicographically smallest J.
Bottom bottom(const Polydisc& P, int q, ZeroCache& cache);

struct Counting {
  std::size_t finite_count = 0;
  std::vector<double> essential_values;
};

Counting counting(const Polydisc& P, int q, double lambda_max, ZeroCache& cache,
                  SpectrumOptions opts = {});

}  // namespace polyspec
