#pragma once

#include <array>

namespace polyspec {

// Supported evaluation window for integer-order Bessel functions on [0, inf).
inline constexpr int kMaxBesselOrder = 200;
inline constexpr double kMaxBesselArgument = 1200.0;

struct EvalConfig {
  /// Stopping criterion for the power series, relative to the running sum.
  double target_rel_error = 1e-12;
  /// Arguments at or below this use the power series; above it the
  /// normalized backward recurrence is used unless the order dominates
  /// the argument, in which case the series has no cancellation.
  double series_switch_point = 2.0;
  int max_terms = 600;

  void validate() const;
};

/// J_m(z) for integer m and 0 <= z. Negative orders reduce by
/// J_{-m} = (-1)^m J_m, so parity holds bit-for-bit.
double bessel_j(int m, double z, const EvalConfig& cfg = {});

/// J'_m(z) = (J_{m-1}(z) - J_{m+1}(z)) / 2.
double bessel_j_prime(int m, double z, const EvalConfig& cfg = {});

/// J''_m(z) from the derivative recurrence applied twice:
/// (J_{m-2} - 2 J_m + J_{m+2}) / 4. No differencing in z.
double bessel_j_second(int m, double z, const EvalConfig& cfg = {});

/// {J_{m-1}(z), J_m(z), J_{m+1}(z)} from a single evaluation pass.
std::array<double, 3> bessel_j_neighbors(int m, double z,
                                         const EvalConfig& cfg = {});

}  // namespace polyspec
