#include "polyspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <thread>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

// Slack on the pruning bound only; membership is decided on the exact value.
constexpr double kPruneSlack = 1e-12;

void check_cutoff(double lambda_max) {
  if (!std::isfinite(lambda_max) || !(lambda_max > 0.0)) {
    throw InvalidArgument("spectrum: lambda_max must be positive and finite");
  }
}

struct CandidateTable {
  std::vector<std::vector<ModeFactor>> dirichlet;   // used for k in J
  std::vector<std::vector<ModeFactor>> complement;  // used for k outside J
};

CandidateTable build_candidates(const Polydisc& P, double budget, ZeroCache& cache) {
  CandidateTable table;
  const std::size_t n = P.dimension();
  table.dirichlet.resize(n);
  table.complement.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = P.radius(k);
    table.dirichlet[k] = dirichlet_factors(a, budget, cache);
    auto& comp = table.complement[k];
    comp.push_back(ModeFactor::holomorphic(0, a));
    auto positive = neumann_factors(a, budget, cache);
    comp.insert(comp.end(), positive.begin(), positive.end());
  }
  return table;
}

// Depth-first product over the per-variable lists with prefix-sum pruning.
std::vector<EigenMode> enumerate_for(const FormIndex& J, const CandidateTable& table,
                                     double lambda_max) {
  const std::size_t n = table.dirichlet.size();
  const double budget = 4.0 * lambda_max;
  std::vector<const std::vector<ModeFactor>*> lists(n);
  for (std::size_t k = 0; k < n; ++k) {
    const bool in_J = std::binary_search(J.begin(), J.end(), k);
    lists[k] = in_J ? &table.dirichlet[k] : &table.complement[k];
    if (lists[k]->empty()) {
      return {};
    }
  }
  // suffix[k] = smallest possible sum of lambda_k over variables k..n-1.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    suffix[k] = suffix[k + 1] + lists[k]->front().lambda_k;
  }

  std::vector<EigenMode> out;
  std::vector<const ModeFactor*> chosen(n, nullptr);
  const std::function<void(std::size_t, double)> descend = [&](std::size_t k,
                                                               double partial) {
    if (k == n) {
      EigenMode mode;
      mode.J = J;
      mode.factors.reserve(n);
      for (const ModeFactor* f : chosen) {
        mode.factors.push_back(*f);
      }
      mode.value = eigenvalue(mode);
      if (mode.value <= lambda_max) {
        out.push_back(std::move(mode));
      }
      return;
    }
    for (const ModeFactor& f : *lists[k]) {
      const double next = partial + f.lambda_k;
      if (next + suffix[k + 1] > budget * (1.0 + kPruneSlack)) {
        break;
      }
      chosen[k] = &f;
      descend(k + 1, next);
    }
  };
  descend(0, 0.0);
  return out;
}

int lexicographic(const FormIndex& a, const FormIndex& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

Polydisc::Polydisc(std::vector<double> radii) : radii_(std::move(radii)) {
  if (radii_.size() < 2) {
    throw InvalidArgument("Polydisc: need at least two radii, got " +
                          std::to_string(radii_.size()));
  }
  for (double a : radii_) {
    if (!std::isfinite(a) || !(a > 0.0)) {
      throw InvalidArgument("Polydisc: radii must be positive and finite");
    }
  }
}

void Polydisc::check_degree(int q) const {
  const int n = static_cast<int>(dimension());
  if (q < 1 || q > n - 1) {
    throw InvalidArgument("form degree q=" + std::to_string(q) +
                          " outside valid range 1.." + std::to_string(n - 1));
  }
}

std::vector<FormIndex> form_indices(std::size_t n, int q) {
  std::vector<FormIndex> out;
  if (q < 0 || static_cast<std::size_t>(q) > n) {
    return out;
  }
  FormIndex current(static_cast<std::size_t>(q));
  for (std::size_t i = 0; i < current.size(); ++i) {
    current[i] = i;
  }
  while (true) {
    out.push_back(current);
    // Advance the rightmost index that still has room.
    std::size_t i = current.size();
    while (i > 0 && current[i - 1] == n - current.size() + (i - 1)) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++current[i - 1];
    for (std::size_t t = i; t < current.size(); ++t) {
      current[t] = current[t - 1] + 1;
    }
  }
  return out;
}

std::string_view to_string(ModeFamily family) {
  switch (family) {
    case ModeFamily::PureHolomorphic:
      return "holomorphic";
    case ModeFamily::PureNeumann:
      return "neumann";
    case ModeFamily::Mixed:
      return "mixed";
  }
  return "unknown";
}

bool EigenMode::in_form_index(std::size_t k) const {
  return std::binary_search(J.begin(), J.end(), k);
}

bool EigenMode::has_holomorphic_factor() const {
  return std::any_of(factors.begin(), factors.end(), [](const ModeFactor& f) {
    return f.kind == FactorKind::Holomorphic;
  });
}

ModeFamily EigenMode::family() const {
  std::size_t holomorphic = 0;
  std::size_t outside = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (in_form_index(k)) continue;
    ++outside;
    if (factors[k].kind == FactorKind::Holomorphic) ++holomorphic;
  }
  if (holomorphic == outside) return ModeFamily::PureHolomorphic;
  if (holomorphic == 0) return ModeFamily::PureNeumann;
  return ModeFamily::Mixed;
}

double eigenvalue(const EigenMode& mode) {
  double sum = 0.0;
  for (const ModeFactor& f : mode.factors) {
    sum += f.lambda_k;
  }
  return 0.25 * sum;
}

void validate(const EigenMode& mode) {
  if (!std::is_sorted(mode.J.begin(), mode.J.end()) ||
      std::adjacent_find(mode.J.begin(), mode.J.end()) != mode.J.end()) {
    throw InvalidArgument("EigenMode: J must be strictly increasing");
  }
  if (!mode.J.empty() && mode.J.back() >= mode.factors.size()) {
    throw InvalidArgument("EigenMode: J refers to a missing variable");
  }
  for (std::size_t k = 0; k < mode.factors.size(); ++k) {
    const bool dirichlet = mode.factors[k].kind == FactorKind::Dirichlet;
    if (mode.in_form_index(k) != dirichlet) {
      throw InvalidArgument("EigenMode: variable " + std::to_string(k + 1) +
                            (dirichlet ? " is Dirichlet but not in J"
                                       : " is in J but not Dirichlet"));
    }
  }
  if (mode.value != eigenvalue(mode)) {
    throw InvalidArgument("EigenMode: stored value differs from (1/4) sum lambda_k");
  }
}

bool mode_less(const EigenMode& a, const EigenMode& b) {
  if (a.value != b.value) {
    return a.value < b.value;
  }
  if (const int c = lexicographic(a.J, b.J); c != 0) {
    return c < 0;
  }
  const std::size_t n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = compare_identity(a.factors[k], b.factors[k]);
    if (c != 0) {
      return c < 0;
    }
  }
  return a.factors.size() < b.factors.size();
}

std::vector<EigenMode> enumerate_modes(const Polydisc& P, int q, double lambda_max,
                                       ZeroCache& cache, EnumerateOptions opts) {
  P.check_degree(q);
  check_cutoff(lambda_max);
  // Candidate lists touch the zero cache; build them before any fan-out so
  // the workers are pure.
  const CandidateTable table = build_candidates(P, 4.0 * lambda_max, cache);
  const std::vector<FormIndex> tuples = form_indices(P.dimension(), q);

  std::vector<std::vector<EigenMode>> per_tuple(tuples.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(tuples.size())));
  if (workers == 1) {
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      per_tuple[t] = enumerate_for(tuples[t], table, lambda_max);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < tuples.size(); t += workers) {
          per_tuple[t] = enumerate_for(tuples[t], table, lambda_max);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  std::vector<EigenMode> modes;
  for (auto& chunk : per_tuple) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(modes));
  }
  std::sort(modes.begin(), modes.end(), mode_less);
  return modes;
}

std::vector<ModeFamily> SpectralPoint::families() const {
  std::vector<ModeFamily> out;
  for (const EigenMode& m : witnesses) {
    const ModeFamily f = m.family();
    if (std::find(out.begin(), out.end(), f) == out.end()) {
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpectralPoint> group_modes(const std::vector<EigenMode>& modes,
                                       const SpectrumOptions& opts) {
  if (!(opts.group_tol > 0.0) || !std::isfinite(opts.group_tol)) {
    throw InvalidArgument("group_tol must be positive");
  }
  std::vector<SpectralPoint> points;
  double previous = -std::numeric_limits<double>::infinity();
  for (const EigenMode& mode : modes) {
    if (points.empty() || mode.value - previous > opts.group_tol * mode.value) {
      SpectralPoint p;
      p.value = mode.value;
      points.push_back(std::move(p));
    }
    SpectralPoint& p = points.back();
    ++p.mode_count;
    if (mode.has_holomorphic_factor()) {
      p.infinite = true;
    } else {
      ++p.finite_multiplicity;
    }
    if (p.witnesses.size() < opts.max_witnesses) {
      p.witnesses.push_back(mode);
    }
    previous = mode.value;
  }
  return points;
}

std::vector<SpectralPoint> assemble_spectrum(const Polydisc& P, int q, double lambda_max,
                                             ZeroCache& cache, SpectrumOptions opts) {
  if (!(opts.group_tol > 0.0) || !std::isfinite(opts.group_tol)) {
    throw InvalidArgument("group_tol must be positive");
  }
  return group_modes(enumerate_modes(P, q, lambda_max, cache, opts.enumerate), opts);
}

Bottom bottom(const Polydisc& P, int q, ZeroCache& cache) {
  P.check_degree(q);
  std::vector<double> dirichlet_floor(P.dimension());
  for (std::size_t k = 0; k < P.dimension(); ++k) {
    dirichlet_floor[k] = ModeFactor::dirichlet(0, 1, P.radius(k), cache).lambda_k;
  }
  Bottom best;
  best.value = std::numeric_limits<double>::infinity();
  for (const FormIndex& J : form_indices(P.dimension(), q)) {
    double sum = 0.0;
    for (std::size_t k : J) {
      sum += dirichlet_floor[k];
    }
    const double value = 0.25 * sum;
    if (value < best.value) {
      best = {value, J};
    }
  }
  return best;
}

Counting counting(const Polydisc& P, int q, double lambda_max, ZeroCache& cache,
                  SpectrumOptions opts) {
  Counting c;
  for (const SpectralPoint& p : assemble_spectrum(P, q, lambda_max, cache, opts)) {
    c.finite_count += p.finite_multiplicity;
    if (p.infinite) {
      c.essential_values.push_back(p.value);
    }
  }
  return c;
}

}  // namespace polyspec
