#include "polyspec/disc_modes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

void check_radius(double radius) {
  if (!std::isfinite(radius) || !(radius > 0.0)) {
    throw InvalidArgument("disc modes: radius must be positive and finite");
  }
}

void check_cutoff(double lambda_max) {
  if (!std::isfinite(lambda_max) || !(lambda_max > 0.0)) {
    throw InvalidArgument("disc modes: lambda_max must be positive and finite");
  }
}

double scaled_square(double zero, double radius) {
  const double k = zero / radius;
  return k * k;
}

void sort_factors(std::vector<ModeFactor>& factors) {
  std::sort(factors.begin(), factors.end(), [](const ModeFactor& a, const ModeFactor& b) {
    if (a.lambda_k != b.lambda_k) {
      return a.lambda_k < b.lambda_k;
    }
    return compare_identity(a, b) < 0;
  });
}

void check_point(const ModeFactor& f, double r) {
  if (!std::isfinite(r) || r < 0.0 || r > f.radius) {
    throw InvalidArgument("radial_profile: r=" + std::to_string(r) +
                          " outside [0, " + std::to_string(f.radius) + "]");
  }
}

}  // namespace

std::string_view to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Dirichlet:
      return "dirichlet";
    case FactorKind::NeumannPositive:
      return "neumann";
    case FactorKind::Holomorphic:
      return "holomorphic";
  }
  return "unknown";
}

ModeFactor ModeFactor::dirichlet(int m, int j, double radius, ZeroCache& cache) {
  check_radius(radius);
  ModeFactor f;
  f.kind = FactorKind::Dirichlet;
  f.angular_order = m;
  f.radial_index = j;
  f.radius = radius;
  f.bessel_zero = cache.zero(std::abs(m), j);
  f.lambda_k = scaled_square(f.bessel_zero, radius);
  return f;
}

ModeFactor ModeFactor::neumann(int m, int j, double radius, ZeroCache& cache) {
  check_radius(radius);
  ModeFactor f;
  f.kind = FactorKind::NeumannPositive;
  f.angular_order = m;
  f.radial_index = j;
  f.radius = radius;
  f.bessel_zero = cache.zero(std::abs(m + 1), j);
  f.lambda_k = scaled_square(f.bessel_zero, radius);
  return f;
}

ModeFactor ModeFactor::holomorphic(int p, double radius) {
  check_radius(radius);
  if (p < 0) {
    // z^p with p < 0 is not smooth at the origin.
    throw InvalidArgument("holomorphic factor requires exponent p >= 0, got " +
                          std::to_string(p));
  }
  ModeFactor f;
  f.kind = FactorKind::Holomorphic;
  f.angular_order = p;
  f.radial_index = 0;
  f.radius = radius;
  return f;
}

int ModeFactor::zero_order() const {
  switch (kind) {
    case FactorKind::Dirichlet:
      return std::abs(angular_order);
    case FactorKind::NeumannPositive:
      return std::abs(angular_order + 1);
    case FactorKind::Holomorphic:
      break;
  }
  return -1;
}

std::strong_ordering compare_identity(const ModeFactor& a, const ModeFactor& b) {
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) {
    return c;
  }
  if (auto c = a.angular_order <=> b.angular_order; c != 0) {
    return c;
  }
  return a.radial_index <=> b.radial_index;
}

std::vector<ModeFactor> dirichlet_factors(double radius, double lambda_max,
                                          ZeroCache& cache) {
  check_radius(radius);
  check_cutoff(lambda_max);
  const double x_max = radius * std::sqrt(lambda_max);
  std::vector<ModeFactor> out;
  // lambda_{order,1} grows strictly with the order, so the first order whose
  // leading zero is out of reach ends the scan.
  for (int order = 0;; ++order) {
    if (order > kMaxZeroOrder) {
      throw UnsupportedRange("dirichlet_factors: cutoff needs orders beyond " +
                             std::to_string(kMaxZeroOrder));
    }
    if (scaled_square(cache.zero(order, 1), radius) > lambda_max) {
      break;
    }
    const auto zeros = cache.zeros_upto(order, x_max);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const int j = static_cast<int>(i) + 1;
      ModeFactor f = ModeFactor::dirichlet(order, j, radius, cache);
      if (f.lambda_k > lambda_max) {
        continue;
      }
      out.push_back(f);
      if (order != 0) {
        out.push_back(ModeFactor::dirichlet(-order, j, radius, cache));
      }
    }
  }
  sort_factors(out);
  return out;
}

std::vector<ModeFactor> neumann_factors(double radius, double lambda_max,
                                        ZeroCache& cache) {
  check_radius(radius);
  check_cutoff(lambda_max);
  const double x_max = radius * std::sqrt(lambda_max);
  std::vector<ModeFactor> out;
  // Order nu = |m+1| is shared by m = nu - 1 and m = -nu - 1 (one m when nu = 0).
  for (int nu = 0;; ++nu) {
    if (nu > kMaxZeroOrder) {
      throw UnsupportedRange("neumann_factors: cutoff needs orders beyond " +
                             std::to_string(kMaxZeroOrder));
    }
    if (scaled_square(cache.zero(nu, 1), radius) > lambda_max) {
      break;
    }
    const auto zeros = cache.zeros_upto(nu, x_max);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const int j = static_cast<int>(i) + 1;
      ModeFactor f = ModeFactor::neumann(nu - 1, j, radius, cache);
      if (f.lambda_k > lambda_max) {
        continue;
      }
      out.push_back(f);
      if (nu != 0) {
        out.push_back(ModeFactor::neumann(-nu - 1, j, radius, cache));
      }
    }
  }
  sort_factors(out);
  return out;
}

double robin_residual(const ModeFactor& f, const EvalConfig& cfg) {
  if (f.kind != FactorKind::NeumannPositive) {
    throw InvalidArgument("robin_residual: factor must be NeumannPositive");
  }
  const double x = std::sqrt(f.lambda_k) * f.radius;
  const int m = f.angular_order;
  return std::abs(x * bessel_j_prime(m, x, cfg) - m * bessel_j(m, x, cfg));
}

double radial_profile(const ModeFactor& f, double r, const EvalConfig& cfg) {
  check_point(f, r);
  switch (f.kind) {
    case FactorKind::Dirichlet:
      return bessel_j(std::abs(f.angular_order), f.bessel_zero * r / f.radius, cfg);
    case FactorKind::NeumannPositive:
      return bessel_j(f.angular_order, f.bessel_zero * r / f.radius, cfg);
    case FactorKind::Holomorphic:
      return std::pow(r, f.angular_order);
  }
  return 0.0;
}

double radial_derivative(const ModeFactor& f, double r, const EvalConfig& cfg) {
  check_point(f, r);
  const double kappa = f.bessel_zero / f.radius;
  switch (f.kind) {
    case FactorKind::Dirichlet:
      return kappa * bessel_j_prime(std::abs(f.angular_order), kappa * r, cfg);
    case FactorKind::NeumannPositive:
      return kappa * bessel_j_prime(f.angular_order, kappa * r, cfg);
    case FactorKind::Holomorphic: {
      const int p = f.angular_order;
      return p == 0 ? 0.0 : p * std::pow(r, p - 1);
    }
  }
  return 0.0;
}

double radial_second_derivative(const ModeFactor& f, double r, const EvalConfig& cfg) {
  check_point(f, r);
  const double kappa = f.bessel_zero / f.radius;
  switch (f.kind) {
    case FactorKind::Dirichlet:
      return kappa * kappa * bessel_j_second(std::abs(f.angular_order), kappa * r, cfg);
    case FactorKind::NeumannPositive:
      return kappa * kappa * bessel_j_second(f.angular_order, kappa * r, cfg);
    case FactorKind::Holomorphic: {
      const int p = f.angular_order;
      return p < 2 ? 0.0 : p * (p - 1) * std::pow(r, p - 2);
    }
  }
  return 0.0;
}

}  // namespace polyspec
