#include "polyspec/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <tuple>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

using cplx = std::complex<double>;

struct AxisRule {
  QuadratureRule radial;
  QuadratureRule angular;
};

std::vector<AxisRule> axis_rules(const std::vector<double>& radii,
                                 const std::vector<int>& radial_nodes,
                                 const std::vector<int>& angular_nodes) {
  std::vector<AxisRule> rules;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    rules.push_back({gauss_legendre(radial_nodes[k], 0.0, radii[k]),
                     periodic_trapezoid(angular_nodes[k])});
  }
  return rules;
}

void check_form_index(const Polydisc& P, const FormIndex& J) {
  P.check_degree(static_cast<int>(J.size()));
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (J[i] >= P.dimension() || (i > 0 && J[i] <= J[i - 1])) {
      throw InvalidArgument("form index J must be strictly increasing within 1..n");
    }
  }
}

using FactorKey = std::tuple<int, int, int>;

FactorKey key_of(const ModeFactor& f) {
  return {static_cast<int>(f.kind), f.angular_order, f.radial_index};
}

// Every combination of holomorphic exponents 0..p_max over the holomorphic
// factors of `mode`.
void expand_holomorphic(const EigenMode& mode, int p_max, std::vector<EigenMode>& out) {
  std::vector<std::size_t> slots;
  for (std::size_t k = 0; k < mode.factors.size(); ++k) {
    if (mode.factors[k].kind == FactorKind::Holomorphic) slots.push_back(k);
  }
  std::vector<int> exps(slots.size(), 0);
  while (true) {
    EigenMode m = mode;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      m.factors[slots[s]] = ModeFactor::holomorphic(exps[s], mode.factors[slots[s]].radius);
    }
    out.push_back(std::move(m));
    std::size_t s = 0;
    while (s < exps.size() && exps[s] == p_max) {
      exps[s] = 0;
      ++s;
    }
    if (s == exps.size()) break;
    ++exps[s];
  }
}

}  // namespace

std::size_t SampledGrid::expected_samples() const {
  std::size_t total = 1;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    total *= static_cast<std::size_t>(radial_nodes[k]) * static_cast<std::size_t>(angular_nodes[k]);
  }
  return total;
}

void SampledGrid::validate() const {
  const Polydisc P(radii);
  check_form_index(P, J);
  if (radial_nodes.size() != radii.size() || angular_nodes.size() != radii.size()) {
    throw InvalidArgument("grid: node counts must be given for every variable");
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radial_nodes[k] < 1 || angular_nodes[k] < 1) {
      throw InvalidArgument("grid: node counts must be positive");
    }
  }
  if (samples.size() != expected_samples()) {
    throw InvalidArgument("grid: expected " + std::to_string(expected_samples()) +
                          " samples, got " + std::to_string(samples.size()));
  }
}

SampledGrid sample_grid(const Polydisc& P, const FormIndex& J,
                        const std::vector<int>& radial_nodes,
                        const std::vector<int>& angular_nodes,
                        const CoefficientFunction& f) {
  SampledGrid grid;
  grid.radii = P.radii();
  grid.J = J;
  grid.radial_nodes = radial_nodes;
  grid.angular_nodes = angular_nodes;
  if (radial_nodes.size() != P.dimension() || angular_nodes.size() != P.dimension()) {
    throw InvalidArgument("sample_grid: node counts must be given for every variable");
  }
  const auto rules = axis_rules(grid.radii, radial_nodes, angular_nodes);
  const std::size_t n = P.dimension();
  std::vector<std::vector<cplx>> axis_points(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (double r : rules[k].radial.nodes) {
      for (double t : rules[k].angular.nodes) {
        axis_points[k].push_back(std::polar(r, t));
      }
    }
  }
  grid.samples.reserve(grid.expected_samples());
  std::vector<std::size_t> idx(n, 0);
  std::vector<cplx> z(n);
  while (true) {
    for (std::size_t k = 0; k < n; ++k) z[k] = axis_points[k][idx[k]];
    grid.samples.push_back(f(z));
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < axis_points[k].size()) break;
      idx[k] = 0;
      if (k == 0) {
        grid.validate();
        return grid;
      }
    }
  }
}

double squared_norm(const SampledGrid& grid) {
  grid.validate();
  const auto rules = axis_rules(grid.radii, grid.radial_nodes, grid.angular_nodes);
  const std::size_t n = grid.radii.size();
  std::vector<std::vector<double>> axis_weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < rules[k].radial.nodes.size(); ++i) {
      for (double wt : rules[k].angular.weights) {
        axis_weights[k].push_back(rules[k].radial.weights[i] * rules[k].radial.nodes[i] * wt);
      }
    }
  }
  double total = 0.0;
  std::vector<std::size_t> idx(n, 0);
  for (const cplx& s : grid.samples) {
    double w = 1.0;
    for (std::size_t k = 0; k < n; ++k) w *= axis_weights[k][idx[k]];
    total += w * std::norm(s);
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < axis_weights[k].size()) break;
      idx[k] = 0;
    }
  }
  return total;
}

double mode_norm_squared(const EigenMode& mode, const EvalConfig& cfg) {
  double norm = 1.0;
  for (const ModeFactor& f : mode.factors) {
    const double a2 = f.radius * f.radius;
    switch (f.kind) {
      case FactorKind::Dirichlet: {
        // int_0^a r J_m(z r/a)^2 dr = (a^2/2) J_{m+1}(z)^2 at a zero z of J_m.
        const double edge = bessel_j(std::abs(f.angular_order) + 1, f.bessel_zero, cfg);
        norm *= std::numbers::pi * a2 * edge * edge;
        break;
      }
      case FactorKind::NeumannPositive: {
        // Lommel: (a^2/2)[J_m'(z)^2 + (1 - m^2/z^2) J_m(z)^2], and J_m'(z) = (m/z) J_m(z)
        // when J_{m+1}(z) = 0.
        const double edge = bessel_j(f.angular_order, f.bessel_zero, cfg);
        norm *= std::numbers::pi * a2 * edge * edge;
        break;
      }
      case FactorKind::Holomorphic: {
        const int p = f.angular_order;
        norm *= std::numbers::pi * std::pow(f.radius, 2 * p + 2) / (p + 1);
        break;
      }
    }
  }
  return norm;
}

std::vector<EigenMode> expansion_basis(const Polydisc& P, const FormIndex& J,
                                       double truncation_lambda, int p_max,
                                       ZeroCache& cache) {
  check_form_index(P, J);
  if (p_max < 0) {
    throw InvalidArgument("holomorphic_max_exponent must be non-negative");
  }
  std::vector<EigenMode> basis;
  for (const EigenMode& mode :
       enumerate_modes(P, static_cast<int>(J.size()), truncation_lambda, cache)) {
    if (mode.J == J) {
      expand_holomorphic(mode, p_max, basis);
    }
  }
  std::sort(basis.begin(), basis.end(), mode_less);
  return basis;
}

Expansion expand(const SampledGrid& grid, double truncation_lambda, int p_max,
                 ZeroCache& cache) {
  grid.validate();
  const Polydisc P(grid.radii);
  Expansion out;
  out.J = grid.J;
  out.truncation_lambda = truncation_lambda;
  out.holomorphic_max_exponent = p_max;
  const std::vector<EigenMode> basis =
      expansion_basis(P, grid.J, truncation_lambda, p_max, cache);
  if (basis.empty()) {
    return out;
  }

  const std::size_t n = P.dimension();
  const auto rules = axis_rules(grid.radii, grid.radial_nodes, grid.angular_nodes);

  // Distinct factors per variable and each mode's position in those lists.
  std::vector<std::vector<ModeFactor>> factors(n);
  std::vector<std::map<FactorKey, std::size_t>> lookup(n);
  std::vector<std::vector<std::size_t>> position(basis.size(), std::vector<std::size_t>(n));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t k = 0; k < n; ++k) {
      const ModeFactor& f = basis[b].factors[k];
      auto [it, inserted] = lookup[k].emplace(key_of(f), factors[k].size());
      if (inserted) factors[k].push_back(f);
      position[b][k] = it->second;
    }
  }

  // Projection matrices: conj(e_f(node)) times the quadrature weight with
  // the r dr dtheta Jacobian.
  std::vector<std::vector<cplx>> projector(n);
  std::vector<std::size_t> axis_size(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& rad = rules[k].radial;
    const auto& ang = rules[k].angular;
    axis_size[k] = rad.nodes.size() * ang.nodes.size();
    auto& M = projector[k];
    M.resize(factors[k].size() * axis_size[k]);
    for (std::size_t f = 0; f < factors[k].size(); ++f) {
      for (std::size_t i = 0; i < rad.nodes.size(); ++i) {
        for (std::size_t l = 0; l < ang.nodes.size(); ++l) {
          const cplx e = factor_value(factors[k][f], std::polar(rad.nodes[i], ang.nodes[l]));
          const double w = rad.weights[i] * rad.nodes[i] * ang.weights[l];
          M[f * axis_size[k] + i * ang.nodes.size() + l] = std::conj(e) * w;
        }
      }
    }
  }

  // Contract one variable at a time, last variable first.
  std::vector<cplx> tensor = grid.samples;
  for (std::size_t k = n; k-- > 0;) {
    std::size_t outer = 1;
    for (std::size_t i = 0; i < k; ++i) outer *= axis_size[i];
    std::size_t inner = 1;
    for (std::size_t i = k + 1; i < n; ++i) inner *= factors[i].size();
    const std::size_t g = axis_size[k];
    const std::size_t nf = factors[k].size();
    std::vector<cplx> next(outer * nf * inner, cplx(0.0, 0.0));
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t f = 0; f < nf; ++f) {
        cplx* dst = &next[(o * nf + f) * inner];
        const cplx* row = &projector[k][f * g];
        for (std::size_t x = 0; x < g; ++x) {
          const cplx w = row[x];
          const cplx* src = &tensor[(o * g + x) * inner];
          for (std::size_t i = 0; i < inner; ++i) dst[i] += w * src[i];
        }
      }
    }
    tensor = std::move(next);
  }

  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < n; ++k) flat = flat * factors[k].size() + position[b][k];
    out.terms.push_back({basis[b], tensor[flat] / mode_norm_squared(basis[b])});
  }
  return out;
}

Expansion expand(const Polydisc& P, const CoefficientFunction& f, const FormIndex& J,
                 double truncation_lambda, ZeroCache& cache, ExpandConfig cfg) {
  if (cfg.radial_nodes < 64) {
    throw InvalidArgument("expand: at least 64 radial nodes per variable");
  }
  int angular = cfg.angular_nodes;
  if (angular == 0) {
    int max_order = 0;
    for (const EigenMode& m :
         expansion_basis(P, J, truncation_lambda, cfg.holomorphic_max_exponent, cache)) {
      for (const ModeFactor& fac : m.factors) {
        max_order = std::max(max_order, std::abs(fac.angular_order));
      }
    }
    angular = std::max(16, 2 * (max_order + 1));
  }
  const std::vector<int> radial_nodes(P.dimension(), cfg.radial_nodes);
  const std::vector<int> angular_nodes(P.dimension(), angular);
  return expand(sample_grid(P, J, radial_nodes, angular_nodes, f), truncation_lambda,
                cfg.holomorphic_max_exponent, cache);
}

Expansion apply_inverse(const Expansion& x) {
  Expansion out = x;
  for (ExpansionTerm& t : out.terms) {
    if (t.mode.value == 0.0) {
      throw InvariantViolation("apply_inverse: eigenmode with eigenvalue 0");
    }
    t.coefficient /= t.mode.value;
  }
  return out;
}

Expansion apply_box(const Expansion& x) {
  Expansion out = x;
  for (ExpansionTerm& t : out.terms) {
    t.coefficient *= t.mode.value;
  }
  return out;
}

cplx synthesize(const Expansion& x, const FormPoint& p, const EvalConfig& cfg) {
  cplx sum(0.0, 0.0);
  for (const ExpansionTerm& t : x.terms) {
    sum += t.coefficient * eval_coefficient(t.mode, p, cfg);
  }
  return sum;
}

double coefficient_norm(const Expansion& x) {
  double s = 0.0;
  for (const ExpansionTerm& t : x.terms) s += std::norm(t.coefficient);
  return std::sqrt(s);
}

double l2_norm(const Expansion& x) {
  double s = 0.0;
  for (const ExpansionTerm& t : x.terms) s += std::norm(t.coefficient) * mode_norm_squared(t.mode);
  return std::sqrt(s);
}

}  // namespace polyspec
