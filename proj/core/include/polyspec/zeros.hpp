#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "polyspec/bessel.hpp"

namespace polyspec {

inline constexpr int kMaxZeroOrder = 150;
inline constexpr int kMaxZeroIndex = 200;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo < x && x < hi; }
  double width() const { return hi - lo; }
};

/// A positive zero of J_m with an enclosure on which J_m changes sign.
struct CertifiedZero {
  double value = 0.0;
  Interval enclosure;
};

struct ZeroConfig {
  EvalConfig eval;
  int max_bisection_steps = 60;
  int max_newton_steps = 8;
  /// Bisection stops once the enclosure is narrower than
  /// relative_width * max(1, lambda).
  double relative_width = 1e-13;
};

/// ((k + 1/2) pi, (k + 1) pi): holds exactly one zero of J_0, the (k+1)-th.
/// The sign change is verified before returning.
Interval j0_bracket(int k, const EvalConfig& cfg = {});

/// Memoized table of lambda_{m,j}, m >= 0, j >= 1.
///
/// Row 0 is built from the J_0 brackets; row m+1 is built by bisecting J_{m+1}
/// between consecutive zeros of J_m (interlacing), which means row m is kept
/// one entry longer than row m+1. Entries are appended under an exclusive
/// lock and never modified afterwards, so readers holding the shared lock
/// always see complete entries.
class ZeroCache {
 public:
  explicit ZeroCache(ZeroConfig cfg = {});

  ZeroCache(const ZeroCache&) = delete;
  ZeroCache& operator=(const ZeroCache&) = delete;

  /// lambda_{|m|, j}. Requires |m| <= 150 and 1 <= j <= 200.
  double zero(int m, int j);
  CertifiedZero certified(int m, int j);

  /// Every lambda_{|m|, j} <= x_max in increasing order.
  std::vector<double> zeros_upto(int m, double x_max);

  /// Number of cached entries for order |m|.
  std::size_t cached(int m) const;

  const ZeroConfig& config() const { return cfg_; }

 private:
  void ensure_locked(int order, int count);
  CertifiedZero refine(int order, Interval bracket) const;

  ZeroConfig cfg_;
  mutable std::shared_mutex mutex_;
  std::vector<std::vector<CertifiedZero>> rows_;
};

double zero(int m, int j, ZeroCache& cache);
std::vector<double> zeros_upto(int m, double x_max, ZeroCache& cache);

}  // namespace polyspec
