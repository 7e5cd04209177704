#include "polyspec/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <string>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

void check_index(int m, int j) {
  if (j < 1) {
    throw InvalidArgument("zeros: index j must be >= 1, got " + std::to_string(j));
  }
  if (std::abs(m) > kMaxZeroOrder || j > kMaxZeroIndex) {
    throw UnsupportedRange("zeros: (m=" + std::to_string(m) + ", j=" +
                           std::to_string(j) + ") outside |m|<=" +
                           std::to_string(kMaxZeroOrder) + ", j<=" +
                           std::to_string(kMaxZeroIndex));
  }
}

bool opposite_signs(double a, double b) {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

}  // namespace

Interval j0_bracket(int k, const EvalConfig& cfg) {
  if (k < 0) {
    throw InvalidArgument("j0_bracket: k must be non-negative");
  }
  const Interval bracket{(k + 0.5) * std::numbers::pi, (k + 1.0) * std::numbers::pi};
  if (bracket.hi > kMaxBesselArgument) {
    throw UnsupportedRange("j0_bracket: bracket beyond evaluation window");
  }
  if (!opposite_signs(bessel_j(0, bracket.lo, cfg), bessel_j(0, bracket.hi, cfg))) {
    throw InternalConsistency("j0_bracket: no sign change of J_0 on bracket " +
                              std::to_string(k));
  }
  return bracket;
}

ZeroCache::ZeroCache(ZeroConfig cfg) : cfg_(cfg) {
  cfg_.eval.validate();
  if (cfg_.max_bisection_steps < 1 || cfg_.max_newton_steps < 0 ||
      !(cfg_.relative_width > 0.0)) {
    throw InvalidArgument("ZeroConfig: invalid refinement settings");
  }
}

CertifiedZero ZeroCache::refine(int order, Interval bracket) const {
  const EvalConfig& eval = cfg_.eval;
  double f_lo = bessel_j(order, bracket.lo, eval);
  const double f_hi = bessel_j(order, bracket.hi, eval);
  if (!opposite_signs(f_lo, f_hi)) {
    throw InternalConsistency("zeros: bracket for order " + std::to_string(order) +
                              " shows no sign change on (" + std::to_string(bracket.lo) +
                              ", " + std::to_string(bracket.hi) + ")");
  }
  for (int step = 0; step < cfg_.max_bisection_steps; ++step) {
    const double mid = 0.5 * (bracket.lo + bracket.hi);
    if (bracket.width() < cfg_.relative_width * std::max(1.0, mid)) {
      break;
    }
    const double f_mid = bessel_j(order, mid, eval);
    if (f_mid == 0.0) {
      bracket = {std::nextafter(mid, 0.0), std::nextafter(mid, 2.0 * mid)};
      break;
    }
    if (opposite_signs(f_lo, f_mid)) {
      bracket.hi = mid;
    } else {
      bracket.lo = mid;
      f_lo = f_mid;
    }
  }

  // Newton polish; the iterate must stay inside the certified enclosure.
  double x = 0.5 * (bracket.lo + bracket.hi);
  for (int step = 0; step < cfg_.max_newton_steps; ++step) {
    const auto [below, at, above] = bessel_j_neighbors(order, x, eval);
    const double slope = 0.5 * (below - above);
    if (at == 0.0 || slope == 0.0) {
      break;
    }
    const double next = x - at / slope;
    if (!(next >= bracket.lo && next <= bracket.hi)) {
      break;
    }
    const bool converged = std::abs(next - x) <= 1e-16 * x;
    x = next;
    if (converged) {
      break;
    }
  }
  return {x, bracket};
}

void ZeroCache::ensure_locked(int order, int count) {
  if (static_cast<int>(rows_.size()) <= order) {
    rows_.resize(static_cast<std::size_t>(order) + 1);
  }
  auto& row = rows_[static_cast<std::size_t>(order)];
  if (static_cast<int>(row.size()) >= count) {
    return;
  }
  if (order == 0) {
    for (int j = static_cast<int>(row.size()) + 1; j <= count; ++j) {
      row.push_back(refine(0, j0_bracket(j - 1, cfg_.eval)));
    }
    return;
  }
  // The j-th zero of J_order lies strictly between the j-th and (j+1)-th
  // zeros of J_{order-1}.
  ensure_locked(order - 1, count + 1);
  const auto& below = rows_[static_cast<std::size_t>(order) - 1];
  auto& target = rows_[static_cast<std::size_t>(order)];
  for (int j = static_cast<int>(target.size()) + 1; j <= count; ++j) {
    const Interval bracket{below[static_cast<std::size_t>(j) - 1].value,
                           below[static_cast<std::size_t>(j)].value};
    target.push_back(refine(order, bracket));
  }
}

CertifiedZero ZeroCache::certified(int m, int j) {
  check_index(m, j);
  const int order = std::abs(m);
  {
    std::shared_lock lock(mutex_);
    if (order < static_cast<int>(rows_.size()) &&
        j <= static_cast<int>(rows_[static_cast<std::size_t>(order)].size())) {
      return rows_[static_cast<std::size_t>(order)][static_cast<std::size_t>(j) - 1];
    }
  }
  std::unique_lock lock(mutex_);
  ensure_locked(order, j);
  return rows_[static_cast<std::size_t>(order)][static_cast<std::size_t>(j) - 1];
}

double ZeroCache::zero(int m, int j) { return certified(m, j).value; }

std::vector<double> ZeroCache::zeros_upto(int m, double x_max) {
  if (!std::isfinite(x_max) || !(x_max > 0.0)) {
    throw InvalidArgument("zeros_upto: x_max must be positive and finite");
  }
  if (std::abs(m) > kMaxZeroOrder) {
    throw UnsupportedRange("zeros_upto: order " + std::to_string(m) +
                           " outside |m|<=" + std::to_string(kMaxZeroOrder));
  }
  std::vector<double> out;
  for (int j = 1;; ++j) {
    if (j > kMaxZeroIndex) {
      throw UnsupportedRange("zeros_upto: more than " + std::to_string(kMaxZeroIndex) +
                             " zeros of J_" + std::to_string(std::abs(m)) +
                             " below " + std::to_string(x_max));
    }
    const double z = zero(m, j);
    if (z > x_max) {
      break;
    }
    out.push_back(z);
  }
  return out;
}

std::size_t ZeroCache::cached(int m) const {
  std::shared_lock lock(mutex_);
  const auto order = static_cast<std::size_t>(std::abs(m));
  return order < rows_.size() ? rows_[order].size() : 0;
}

double zero(int m, int j, ZeroCache& cache) { return cache.zero(m, j); }

std::vector<double> zeros_upto(int m, double x_max, ZeroCache& cache) {
  return cache.zeros_upto(m, x_max);
}

}  // namespace polyspec
