#include "polyspec/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

// Orders up to two beyond the public window are reachable through the
// derivative helpers.
constexpr int kInternalMaxOrder = kMaxBesselOrder + 2;
constexpr double kRescaleThreshold = 1e250;
constexpr double kRescaleFactor = 1e-250;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void scale(double f) {
    sum_ *= f;
    compensation_ *= f;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void check_arguments(int m, double z, int max_order) {
  if (!std::isfinite(z)) {
    throw InvalidArgument("bessel: non-finite argument");
  }
  if (z < 0.0) {
    throw InvalidArgument("bessel: argument must be non-negative, got " +
                          std::to_string(z));
  }
  if (std::abs(m) > max_order || z > kMaxBesselArgument) {
    throw UnsupportedRange("bessel: (m=" + std::to_string(m) +
                           ", z=" + std::to_string(z) +
                           ") outside supported window |m|<=" +
                           std::to_string(max_order) + ", z<=" +
                           std::to_string(kMaxBesselArgument));
  }
}

double parity_sign(int m) { return (m < 0 && (m % 2 != 0)) ? -1.0 : 1.0; }

bool series_preferred(int order, double z, const EvalConfig& cfg) {
  const double half = 0.5 * z;
  return z <= cfg.series_switch_point || half * half <= order + 1.0;
}

// Power series for order >= 0. No cancellation in the regions selected by
// series_preferred beyond a modest factor.
double series(int order, double z, const EvalConfig& cfg) {
  if (z == 0.0) {
    return order == 0 ? 1.0 : 0.0;
  }
  const double half = 0.5 * z;
  double term = 1.0;
  for (int k = 1; k <= order; ++k) {
    term *= half / k;
    if (term < std::numeric_limits<double>::min()) {
      // |J_order(z)| is below the normal range; report it as zero.
      return 0.0;
    }
  }
  const double step = -half * half;
  const double stop = cfg.target_rel_error * 1e-4;
  CompensatedSum sum;
  sum.add(term);
  for (int l = 1; l < cfg.max_terms; ++l) {
    term *= step / (static_cast<double>(l) * (l + order));
    sum.add(term);
    const bool decreasing = half * half < static_cast<double>(l + 1) * (l + 1 + order);
    if (decreasing && std::abs(term) <= stop * std::abs(sum.value())) {
      return sum.value();
    }
  }
  throw InternalConsistency("bessel: power series did not converge within max_terms");
}

// Miller's backward recurrence, normalized by 1 = J_0 + 2 sum_k J_{2k}.
// Returns J_0..J_top.
std::vector<double> backward_recurrence(int top, double z) {
  const double base = std::max(static_cast<double>(top), std::ceil(z));
  int start = static_cast<int>(base + 24.0 + std::sqrt(60.0 * base));
  start += start % 2;

  std::vector<double> values(static_cast<std::size_t>(top) + 1, 0.0);
  CompensatedSum norm;
  double next = 0.0;  // f_{k+1}
  double cur = 1.0;   // f_k
  if (start <= top) {
    values[static_cast<std::size_t>(start)] = cur;
  }
  for (int k = start; k >= 1; --k) {
    const double prev = (2.0 * k / z) * cur - next;  // f_{k-1}
    next = cur;
    cur = prev;
    const int order = k - 1;
    if (order <= top) {
      values[static_cast<std::size_t>(order)] = cur;
    }
    if (order % 2 == 0) {
      norm.add(order == 0 ? cur : 2.0 * cur);
    }
    if (std::abs(cur) > kRescaleThreshold) {
      cur *= kRescaleFactor;
      next *= kRescaleFactor;
      norm.scale(kRescaleFactor);
      for (int i = order; i <= top; ++i) {
        values[static_cast<std::size_t>(i)] *= kRescaleFactor;
      }
    }
  }
  const double n = norm.value();
  for (double& v : values) {
    v /= n;
  }
  return values;
}

// J_lo..J_hi (signed orders) by one method chosen for the smallest |order|.
std::vector<double> evaluate_range(int lo, int hi, double z, const EvalConfig& cfg) {
  int min_abs = (lo <= 0 && hi >= 0) ? 0 : std::min(std::abs(lo), std::abs(hi));
  int max_abs = std::max(std::abs(lo), std::abs(hi));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  if (z == 0.0 || series_preferred(min_abs, z, cfg)) {
    for (int m = lo; m <= hi; ++m) {
      out.push_back(parity_sign(m) * series(std::abs(m), z, cfg));
    }
    return out;
  }
  const std::vector<double> table = backward_recurrence(max_abs, z);
  for (int m = lo; m <= hi; ++m) {
    out.push_back(parity_sign(m) * table[static_cast<std::size_t>(std::abs(m))]);
  }
  return out;
}

}  // namespace

void EvalConfig::validate() const {
  if (!(target_rel_error > 0.0) || !std::isfinite(target_rel_error)) {
    throw InvalidArgument("EvalConfig: target_rel_error must be positive");
  }
  if (max_terms < 1) {
    throw InvalidArgument("EvalConfig: max_terms must be at least 1");
  }
  if (!(series_switch_point >= 0.0)) {
    throw InvalidArgument("EvalConfig: series_switch_point must be non-negative");
  }
}

double bessel_j(int m, double z, const EvalConfig& cfg) {
  check_arguments(m, z, kMaxBesselOrder);
  cfg.validate();
  const int order = std::abs(m);
  double value;
  if (z == 0.0 || series_preferred(order, z, cfg)) {
    value = series(order, z, cfg);
  } else {
    value = backward_recurrence(order, z)[static_cast<std::size_t>(order)];
  }
  return parity_sign(m) * value;
}

std::array<double, 3> bessel_j_neighbors(int m, double z, const EvalConfig& cfg) {
  check_arguments(m, z, kMaxBesselOrder);
  cfg.validate();
  const std::vector<double> v = evaluate_range(m - 1, m + 1, z, cfg);
  return {v[0], v[1], v[2]};
}

double bessel_j_prime(int m, double z, const EvalConfig& cfg) {
  check_arguments(m, z, kMaxBesselOrder);
  cfg.validate();
  const std::vector<double> v = evaluate_range(m - 1, m + 1, z, cfg);
  return 0.5 * (v[0] - v[2]);
}

double bessel_j_second(int m, double z, const EvalConfig& cfg) {
  check_arguments(m, z, kMaxBesselOrder);
  check_arguments(m + (m >= 0 ? 2 : -2), z, kInternalMaxOrder);
  cfg.validate();
  const std::vector<double> v = evaluate_range(m - 2, m + 2, z, cfg);
  return 0.25 * (v[0] - 2.0 * v[2] + v[4]);
}

}  // namespace polyspec
