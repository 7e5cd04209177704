#include "polyspec/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "polyspec/bessel.hpp"
#include "polyspec/eigenforms.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/quadrature.hpp"

namespace polyspec::verify {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1
};

Tridiagonal assemble(const FdConfig& cfg) {
  const int n = cfg.grid_points;
  const double a = cfg.radius;
  const double h = a / n;
  const double m2 = static_cast<double>(cfg.angular_order) * cfg.angular_order;
  auto r_cell = [h](int i) { return (i - 0.5) * h; };  // i = 1..n
  auto r_face = [h](int i) { return i * h; };          // face between i and i+1

  // Weighted form: -(r S')' + (m^2/r) S = lambda r S.
  std::vector<double> A_diag(static_cast<std::size_t>(n));
  std::vector<double> A_off(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i <= n; ++i) {
    double d = r_face(i - 1) / (h * h) + m2 / r_cell(i);
    if (i < n) {
      d += r_face(i) / (h * h);
      A_off[static_cast<std::size_t>(i) - 1] = -r_face(i) / (h * h);
    } else if (cfg.bc == RadialBoundary::Dirichlet) {
      // Ghost S_{n+1} = -S_n puts S = 0 at r = a.
      d += 2.0 * a / (h * h);
    } else {
      // Ghost from (S_{n+1} - S_n)/h = (m/a)(S_{n+1} + S_n)/2.
      const double c = cfg.angular_order * h / (2.0 * a);
      d -= (a / (h * h)) * (2.0 * c / (1.0 - c));
    }
    A_diag[static_cast<std::size_t>(i) - 1] = d;
  }

  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(n));
  t.off.resize(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i <= n; ++i) {
    t.diag[static_cast<std::size_t>(i) - 1] = A_diag[static_cast<std::size_t>(i) - 1] / r_cell(i);
    if (i < n) {
      t.off[static_cast<std::size_t>(i) - 1] =
          A_off[static_cast<std::size_t>(i) - 1] / std::sqrt(r_cell(i) * r_cell(i + 1));
    }
  }
  return t;
}

// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
int sturm_count(const Tridiagonal& t, double x) {
  int count = 0;
  double d = 1.0;
  const double tiny = kEps * kEps;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1] / d;
    d = t.diag[i] - x - coupling;
    if (d == 0.0) {
      d = -tiny;
    }
    if (d < 0.0) {
      ++count;
    }
  }
  return count;
}

double kth_eigenvalue(const Tridiagonal& t, int k, double lo, double hi) {
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi ||
        hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) {
      return mid;
    }
    if (sturm_count(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw InternalConsistency("fd_radial_eigs: Sturm bisection did not converge");
}

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

char kind_letter(FactorKind k) {
  switch (k) {
    case FactorKind::Dirichlet:
      return 'D';
    case FactorKind::NeumannPositive:
      return 'N';
    case FactorKind::Holomorphic:
      return 'H';
  }
  return '?';
}

struct Candidate {
  double lambda;
  FactorKind kind;
  int order;
  int index;
};

}  // namespace

std::string_view to_string(RadialBoundary bc) {
  return bc == RadialBoundary::Dirichlet ? "dirichlet" : "dbar-neumann";
}

void FdConfig::validate() const {
  if (grid_points < 64) {
    throw InvalidArgument("FdConfig: grid_points must be at least 64");
  }
  if (!std::isfinite(radius) || !(radius > 0.0)) {
    throw InvalidArgument("FdConfig: radius must be positive");
  }
  if (bc == RadialBoundary::DbarNeumann &&
      std::abs(angular_order) * (radius / grid_points) >= 2.0 * radius) {
    throw InvalidArgument("FdConfig: grid too coarse for the Robin closure");
  }
}

std::vector<double> fd_radial_eigs(const FdConfig& cfg, int count) {
  cfg.validate();
  if (count < 1 || count > 10) {
    throw InvalidArgument("fd_radial_eigs: count must lie in [1, 10]");
  }
  const Tridiagonal t = assemble(cfg);
  // Gershgorin enclosure of the whole spectrum.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off[i - 1]);
    if (i + 1 < t.diag.size()) radius += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  const double pad = 1.0 + kEps * std::max(std::abs(lo), std::abs(hi));
  lo -= pad;
  hi += pad;
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(kth_eigenvalue(t, k, lo, hi));
  }
  return out;
}

FdConvergence fd_convergence(FdConfig cfg, int index, double reference,
                             const std::vector<int>& grids) {
  if (grids.size() < 2) {
    throw InvalidArgument("fd_convergence: need at least two grids");
  }
  FdConvergence study;
  study.grids = grids;
  study.reference = reference;
  std::vector<double> log_n;
  std::vector<double> log_err;
  for (int n : grids) {
    cfg.grid_points = n;
    const double v = fd_radial_eigs(cfg, index + 1)[static_cast<std::size_t>(index)];
    study.values.push_back(v);
    const double err = std::abs(v - reference);
    if (err > 0.0) {
      log_n.push_back(std::log(static_cast<double>(n)));
      log_err.push_back(std::log(err));
    }
  }
  study.observed_order = log_n.size() >= 2 ? -log_slope(log_n, log_err)
                                           : std::numeric_limits<double>::quiet_NaN();
  const std::size_t last = grids.size() - 1;
  const double ratio = static_cast<double>(grids[last]) / grids[last - 1];
  const double factor = ratio * ratio;
  study.extrapolated =
      (factor * study.values[last] - study.values[last - 1]) / (factor - 1.0);
  return study;
}

double quad_inner_product(int m, int j, int k, ZeroCache& cache, int nodes) {
  if (m < 0 || j < 1 || k < 1) {
    throw InvalidArgument("quad_inner_product: need m >= 0 and j, k >= 1");
  }
  if (nodes < 256) {
    throw InvalidArgument("quad_inner_product: at least 256 nodes");
  }
  const double zj = cache.zero(m, j);
  const double zk = cache.zero(m, k);
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    sum += rule.weights[i] * r * bessel_j(m, zj * r) * bessel_j(m, zk * r);
  }
  return sum;
}

std::string ModeDescriptor::to_string() const {
  std::ostringstream os;
  os << "J=[";
  for (std::size_t i = 0; i < J.size(); ++i) {
    os << (i ? "," : "") << J[i] + 1;
  }
  os << "]";
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    os << ' ' << kind_letter(kinds[k]) << '(' << orders[k];
    if (kinds[k] != FactorKind::Holomorphic) {
      os << ',' << indices[k];
    }
    os << ')';
  }
  return os.str();
}

ModeDescriptor describe(const EigenMode& mode) {
  ModeDescriptor d;
  d.J = mode.J;
  for (const ModeFactor& f : mode.factors) {
    d.kinds.push_back(f.kind);
    d.orders.push_back(f.angular_order);
    d.indices.push_back(f.radial_index);
  }
  return d;
}

BruteForceResult brute_force_spectrum(const Polydisc& P, int q, double lambda_max,
                                      int m_bound, int j_bound, ZeroCache& cache) {
  const std::size_t n = P.dimension();
  if (n != 2 && n != 3) {
    throw InvalidArgument("brute_force_spectrum: only n = 2 or 3");
  }
  P.check_degree(q);
  if (!(lambda_max > 0.0)) {
    throw InvalidArgument("brute_force_spectrum: lambda_max must be positive");
  }
  if (m_bound < 1 || j_bound < 1 || m_bound >= kMaxZeroOrder || j_bound >= kMaxZeroIndex) {
    throw InvalidArgument("brute_force_spectrum: bounds out of range");
  }
  const double budget = 4.0 * lambda_max;

  // Left out: Dirichlet |m| = m_bound + 1, Neumann m = -m_bound - 1 (order
  // m_bound), and index j_bound + 1 of any order, whose smallest is order 0.
  const double excluded_zero = std::min(cache.zero(m_bound, 1), cache.zero(0, j_bound + 1));
  BruteForceResult result;
  result.smallest_excluded = std::numeric_limits<double>::infinity();
  for (double a : P.radii()) {
    const double lam = (excluded_zero / a) * (excluded_zero / a);
    result.smallest_excluded = std::min(result.smallest_excluded, lam);
  }
  if (!(result.smallest_excluded > budget)) {
    std::ostringstream os;
    os << "brute_force_spectrum: bounds m<=" << m_bound << ", j<=" << j_bound
       << " exclude a factor with lambda_k=" << result.smallest_excluded
       << " <= 4*lambda_max=" << budget;
    throw OracleInsufficient(os.str());
  }

  // Per-variable lists for both boundary kinds. Factors with lambda_k beyond
  // the whole budget cannot appear in any admissible tuple.
  std::vector<std::vector<Candidate>> in_J(n), out_J(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = P.radius(k);
    out_J[k].push_back({0.0, FactorKind::Holomorphic, 0, 0});
    for (int m = -m_bound; m <= m_bound; ++m) {
      for (int j = 1; j <= j_bound; ++j) {
        const double zd = cache.zero(std::abs(m), j);
        const double ld = (zd / a) * (zd / a);
        if (ld <= budget) in_J[k].push_back({ld, FactorKind::Dirichlet, m, j});
        const double zn = cache.zero(std::abs(m + 1), j);
        const double ln = (zn / a) * (zn / a);
        if (ln <= budget) out_J[k].push_back({ln, FactorKind::NeumannPositive, m, j});
      }
    }
  }

  auto emit = [&](std::size_t mask, const std::vector<const Candidate*>& pick) {
    double sum = 0.0;
    for (const Candidate* c : pick) sum += c->lambda;
    const double value = 0.25 * sum;
    if (value > lambda_max) return;
    OracleMode om;
    om.value = value;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) om.descriptor.J.push_back(k);
      om.descriptor.kinds.push_back(pick[k]->kind);
      om.descriptor.orders.push_back(pick[k]->order);
      om.descriptor.indices.push_back(pick[k]->index);
    }
    result.modes.push_back(std::move(om));
  };

  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) != q) continue;
    auto list = [&](std::size_t k) -> const std::vector<Candidate>& {
      return (mask & (std::size_t{1} << k)) ? in_J[k] : out_J[k];
    };
    if (n == 2) {
      for (const Candidate& c0 : list(0)) {
        for (const Candidate& c1 : list(1)) {
          emit(mask, {&c0, &c1});
        }
      }
    } else {
      for (const Candidate& c0 : list(0)) {
        for (const Candidate& c1 : list(1)) {
          for (const Candidate& c2 : list(2)) {
            emit(mask, {&c0, &c1, &c2});
          }
        }
      }
    }
  }
  std::sort(result.modes.begin(), result.modes.end(),
            [](const OracleMode& a, const OracleMode& b) {
              if (a.value != b.value) return a.value < b.value;
              return a.descriptor < b.descriptor;
            });
  return result;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bessel", "zeros", "modes",
                                                  "spectrum-oracle", "forms", "fd"};
  return names;
}

namespace {

// Records max observed against a threshold (observed < threshold passes).
Check upper_bound(std::string name, double observed, double threshold,
                  std::string detail = {}) {
  Check c;
  c.name = std::move(name);
  c.observed = observed;
  c.threshold = threshold;
  c.passed = std::isfinite(observed) && observed < threshold;
  c.detail = std::move(detail);
  return c;
}

void bessel_suite(SuiteReport& report, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order(0, 30);
  std::uniform_real_distribution<double> arg(1e-3, 60.0);
  double rec = 0.0, ode = 0.0, parity = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int m = order(rng);
    const double z = arg(rng);
    rec = std::max(rec, std::abs(m * bessel_j(m, z) -
                                 0.5 * z * (bessel_j(m + 1, z) + bessel_j(m - 1, z))));
    const double d2 = bessel_j_second(m, z);
    const double d1 = bessel_j_prime(m, z);
    ode = std::max(ode, std::abs(d2 + d1 / z + (1.0 - m * m / (z * z)) * bessel_j(m, z)));
    parity = std::max(parity, std::abs(bessel_j(-m, z) - ((m % 2) ? -1.0 : 1.0) * bessel_j(m, z)));
  }
  report.checks.push_back(upper_bound("recurrence residual", rec, 1e-10));
  report.checks.push_back(upper_bound("bessel equation residual", ode, 1e-9));
  Check p;
  p.name = "parity exact";
  p.observed = parity;
  p.passed = parity == 0.0;
  report.checks.push_back(p);

  double laurent = 0.0;
  for (double z : {1.0, 5.0, 10.0}) {
    for (int s = 0; s < 16; ++s) {
      const std::complex<double> t = std::polar(1.0, 2.0 * std::numbers::pi * s / 16.0);
      std::complex<double> sum = 0.0;
      for (int m = -60; m <= 60; ++m) {
        sum += std::pow(t, m) * bessel_j(m, z);
      }
      const std::complex<double> exact = std::exp(0.5 * z * (t - 1.0 / t));
      laurent = std::max(laurent, std::abs(sum - exact));
    }
  }
  report.checks.push_back(upper_bound("generating function residual", laurent, 1e-10));

  const QuadratureRule trap = periodic_trapezoid(2048);
  std::uniform_int_distribution<int> small_order(0, 10);
  std::uniform_real_distribution<double> small_arg(0.0, 30.0);
  double integral = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int m = small_order(rng);
    const double z = small_arg(rng);
    double s = 0.0;
    for (std::size_t l = 0; l < trap.nodes.size(); ++l) {
      s += trap.weights[l] * std::cos(m * trap.nodes[l] - z * std::sin(trap.nodes[l]));
    }
    integral = std::max(integral, std::abs(bessel_j(m, z) - s / (2.0 * std::numbers::pi)));
  }
  report.checks.push_back(upper_bound("integral representation residual", integral, 1e-9));
}

void zeros_suite(SuiteReport& report, ZeroCache& cache) {
  double bracket_violation = 0.0;
  for (int j = 1; j <= 20; ++j) {
    const double z = cache.zero(0, j);
    const double lo = (j - 0.5) * std::numbers::pi;
    const double hi = j * std::numbers::pi;
    if (!(lo < z && z < hi)) bracket_violation += 1.0;
  }
  report.checks.push_back(upper_bound("J_0 zeros inside brackets (violations)",
                                      bracket_violation, 0.5));
  double interlace_violation = 0.0;
  double residual = 0.0;
  double min_slope = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= 20; ++m) {
    for (int j = 1; j <= 20; ++j) {
      const double a = cache.zero(m, j);
      const double b = cache.zero(m + 1, j);
      const double c = cache.zero(m, j + 1);
      if (!(a < b && b < c)) interlace_violation += 1.0;
      residual = std::max(residual, std::abs(bessel_j(m, a)));
      min_slope = std::min(min_slope, std::abs(bessel_j_prime(m, a)));
    }
  }
  report.checks.push_back(upper_bound("interlacing (violations)", interlace_violation, 0.5));
  report.checks.push_back(upper_bound("|J_m(lambda_mj)|", residual, 1e-11));
  report.checks.push_back(upper_bound("1/|J'_m(lambda_mj)|", 1.0 / min_slope, 1e3));
}

void modes_suite(SuiteReport& report, ZeroCache& cache) {
  double robin = 0.0;
  for (const ModeFactor& f : neumann_factors(1.0, 400.0, cache)) {
    robin = std::max(robin, robin_residual(f));
  }
  report.checks.push_back(upper_bound("robin residual", robin, 1e-10));

  double fd_gap = 0.0;
  for (int m = -2; m <= 2; ++m) {
    for (RadialBoundary bc : {RadialBoundary::Dirichlet, RadialBoundary::DbarNeumann}) {
      FdConfig cfg{2000, 1.0, m, bc};
      const auto fd = fd_radial_eigs(cfg, 3);
      std::vector<double> exact;
      if (bc == RadialBoundary::Dirichlet) {
        for (int j = 1; j <= 3; ++j) exact.push_back(std::pow(cache.zero(m, j), 2));
      } else {
        if (m >= 0) exact.push_back(0.0);
        for (int j = 1; exact.size() < 3; ++j) exact.push_back(std::pow(cache.zero(m + 1, j), 2));
      }
      for (std::size_t i = 0; i < 3; ++i) {
        const double scale = std::max(1.0, exact[i]);
        fd_gap = std::max(fd_gap, std::abs(fd[i] - exact[i]) / scale);
      }
    }
  }
  report.checks.push_back(upper_bound("finite-difference agreement (N=2000)", fd_gap, 5e-3));
}

void spectrum_oracle_suite(SuiteReport& report, ZeroCache& cache) {
  const std::vector<std::vector<double>> configs = {
      {1.0, 1.0}, {1.0, std::sqrt(2.0)}, {1.0, 2.0, 3.0}};
  for (const auto& radii : configs) {
    const Polydisc P(radii);
    for (int q = 1; q < static_cast<int>(radii.size()); ++q) {
      const double lambda_max = 10.0;
      const auto modes = enumerate_modes(P, q, lambda_max, cache);
      const auto oracle = brute_force_spectrum(P, q, lambda_max, 40, 15, cache);
      double mismatch = modes.size() == oracle.modes.size() ? 0.0 : 1.0;
      double gap = 0.0;
      if (mismatch == 0.0) {
        std::vector<ModeDescriptor> a, b;
        for (std::size_t i = 0; i < modes.size(); ++i) {
          a.push_back(describe(modes[i]));
          b.push_back(oracle.modes[i].descriptor);
          gap = std::max(gap, std::abs(modes[i].value - oracle.modes[i].value));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) mismatch = 1.0;
      }
      std::ostringstream name;
      name << "enumeration equals brute force, n=" << radii.size() << " q=" << q
           << " radii[1]=" << radii[1];
      Check c = upper_bound(name.str(), gap, 1e-10,
                            std::to_string(modes.size()) + " modes");
      c.passed = c.passed && mismatch == 0.0;
      report.checks.push_back(c);
    }
  }
}

void forms_suite(SuiteReport& report, std::mt19937_64& rng, ZeroCache& cache) {
  const Polydisc P({1.0, 1.0});
  std::uniform_real_distribution<double> radial(0.05, 0.95);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double pde = 0.0, dirichlet = 0.0, dbar = 0.0;
  for (const EigenMode& mode : enumerate_modes(P, 1, 12.0, cache)) {
    for (int s = 0; s < 10; ++s) {
      const auto p = FormPoint::from_polar(P, {radial(rng), radial(rng)}, {angle(rng), angle(rng)});
      pde = std::max(pde, laplacian_residual(mode, p));
    }
    for (std::size_t k = 0; k < 2; ++k) {
      for (int s = 0; s < 5; ++s) {
        const double th = angle(rng);
        if (mode.in_form_index(k)) {
          std::vector<double> r = {radial(rng), radial(rng)};
          std::vector<double> t = {angle(rng), angle(rng)};
          r[k] = P.radius(k);
          t[k] = th;
          dirichlet = std::max(dirichlet,
                               std::abs(eval_coefficient(mode, FormPoint::from_polar(P, r, t))));
        } else {
          dbar = std::max(dbar, dbar_boundary_residual(mode, k, th));
        }
      }
    }
  }
  report.checks.push_back(upper_bound("PDE residual", pde, 1e-8));
  report.checks.push_back(upper_bound("Dirichlet boundary values", dirichlet, 1e-11));
  report.checks.push_back(upper_bound("dbar boundary residual", dbar, 1e-10));
}

void fd_suite(SuiteReport& report, ZeroCache& cache) {
  const std::vector<int> grids = {500, 1000, 2000, 4000};
  for (int m = -2; m <= 2; ++m) {
    for (RadialBoundary bc : {RadialBoundary::Dirichlet, RadialBoundary::DbarNeumann}) {
      std::vector<double> exact;
      if (bc == RadialBoundary::Dirichlet) {
        for (int j = 1; j <= 3; ++j) exact.push_back(std::pow(cache.zero(m, j), 2));
      } else {
        if (m >= 0) exact.push_back(0.0);
        for (int j = 1; exact.size() < 3; ++j) exact.push_back(std::pow(cache.zero(m + 1, j), 2));
      }
      for (int i = 0; i < 3; ++i) {
        const double reference = exact[static_cast<std::size_t>(i)];
        const auto study = fd_convergence({grids.back(), 1.0, m, bc}, i, reference, grids);
        std::ostringstream name;
        name << to_string(bc) << " m=" << m << " eig#" << i + 1;
        if (reference == 0.0) {
          const double scale = exact[1];
          report.checks.push_back(upper_bound(name.str() + " zero eigenvalue",
                                              std::abs(study.extrapolated) / scale, 1e-6));
          continue;
        }
        report.checks.push_back(upper_bound(name.str() + " |order-2|",
                                            std::abs(study.observed_order - 2.0), 0.3));
        report.checks.push_back(upper_bound(
            name.str() + " richardson rel err",
            std::abs(study.extrapolated - reference) / reference, 1e-6));
      }
    }
  }
}

}  // namespace

SuiteReport run_suite(std::string_view name, std::uint64_t seed, ZeroCache& cache) {
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  std::mt19937_64 rng(seed);
  if (name == "bessel") {
    bessel_suite(report, rng);
  } else if (name == "zeros") {
    zeros_suite(report, cache);
  } else if (name == "modes") {
    modes_suite(report, cache);
  } else if (name == "spectrum-oracle") {
    spectrum_oracle_suite(report, cache);
  } else if (name == "forms") {
    forms_suite(report, rng, cache);
  } else if (name == "fd") {
    fd_suite(report, cache);
  } else {
    throw InvalidArgument("unknown verification suite '" + std::string(name) + "'");
  }
  return report;
}

}  // namespace polyspec::verify
