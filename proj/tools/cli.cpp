#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "polyspec/errors.hpp"
#include "polyspec/grid_file.hpp"

namespace polyspec::cli {

using nlohmann::json;

namespace {

std::string fixed17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json one_based(const FormIndex& J) {
  json a = json::array();
  for (std::size_t k : J) a.push_back(k + 1);
  return a;
}

FormIndex zero_based(const json& a) {
  FormIndex J;
  for (const auto& v : a) {
    const auto k = v.get<std::size_t>();
    if (k < 1) throw InvalidArgument("J entries are 1-based");
    J.push_back(k - 1);
  }
  return J;
}

FactorKind kind_from(const std::string& s) {
  if (s == "dirichlet") return FactorKind::Dirichlet;
  if (s == "neumann") return FactorKind::NeumannPositive;
  if (s == "holomorphic") return FactorKind::Holomorphic;
  throw InvalidArgument("unknown factor kind '" + s + "'");
}

std::string family_label(const SpectralPoint& p) {
  std::string label;
  for (ModeFamily f : p.families()) {
    if (!label.empty()) label += '|';
    label += to_string(f);
  }
  return label;
}

// Shared state for the subcommand callbacks.
struct Options {
  std::string format = "table";
  // zeros
  int order = 0;
  int count = 5;
  double tol = 1e-13;
  // spectrum / bottom / sample
  std::string radii;
  int q = 1;
  double max_lambda = 30.0;
  double group_tol = 1e-11;
  std::size_t witnesses = 8;
  unsigned threads = 1;
  // verify
  std::string suite = "all";
  std::uint64_t seed = 20240517;
  // oracle fd
  std::string bc = "dirichlet";
  int grid = 2000;
  double radius = 1.0;
  // inverse / sample
  std::string input;
  std::string output;
  std::string output_grid;
  double truncation = 30.0;
  int p_max = 16;
  std::string J = "1";
  int radial_nodes = 64;
  int angular_nodes = 32;
  std::string function = "one";
};

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw CLI::ValidationError("--format", "unsupported format '" + format + "'");
}

int cmd_zeros(const Options& o, std::ostream& out) {
  if (o.count < 1) throw InvalidArgument("--count must be at least 1");
  ZeroConfig cfg;
  cfg.relative_width = o.tol;
  ZeroCache cache(cfg);
  std::vector<double> values;
  for (int j = 1; j <= o.count; ++j) values.push_back(cache.zero(o.order, j));
  if (o.format == "json") {
    json doc = {{"schema_version", kSchemaVersion},
                {"order", o.order},
                {"zeros", values}};
    out << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "j,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << fixed17(values[i]) << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << fixed17(values[i]) << '\n';
  }
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Polydisc P(parse_list(o.radii));
  ZeroCache cache;
  SpectrumOptions opts;
  opts.group_tol = o.group_tol;
  opts.max_witnesses = o.witnesses;
  opts.enumerate.threads = o.threads;
  OutputRecord record;
  record.radii = P.radii();
  record.q = o.q;
  record.max_lambda = o.max_lambda;
  record.group_tol = o.group_tol;
  record.witnesses = o.witnesses;
  record.points = assemble_spectrum(P, o.q, o.max_lambda, cache, opts);
  if (o.format == "json") {
    out << to_json(record).dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "value,finite_multiplicity,infinite,family\n";
    for (const auto& p : record.points) {
      out << fixed17(p.value) << ',' << p.finite_multiplicity << ','
          << (p.infinite ? "true" : "false") << ',' << family_label(p) << '\n';
    }
  } else {
    out << "value                     finite  infinite  family\n";
    for (const auto& p : record.points) {
      char line[128];
      std::snprintf(line, sizeof(line), "%-25s %6zu  %-8s  ", fixed17(p.value).c_str(),
                    p.finite_multiplicity, p.infinite ? "yes" : "no");
      out << line << family_label(p) << '\n';
      for (const auto& w : p.witnesses) out << "    " << verify::describe(w).to_string() << '\n';
    }
  }
  return kOk;
}

int cmd_bottom(const Options& o, std::ostream& out) {
  const Polydisc P(parse_list(o.radii));
  ZeroCache cache;
  const Bottom b = bottom(P, o.q, cache);
  if (o.format == "json") {
    json doc = {{"schema_version", kSchemaVersion}, {"value", b.value}, {"J", one_based(b.J)}};
    out << doc.dump(2) << '\n';
  } else {
    out << fixed17(b.value) << " J=" << one_based(b.J).dump() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = verify::suite_names();
  } else {
    suites.push_back(o.suite);
  }
  ZeroCache cache;
  json doc = {{"schema_version", kSchemaVersion}, {"seed", o.seed}, {"suites", json::array()}};
  bool all_passed = true;
  for (const auto& name : suites) {
    const verify::SuiteReport report = verify::run_suite(name, o.seed, cache);
    doc["suites"].push_back(to_json(report));
    for (const auto& c : report.checks) {
      if (!c.passed) {
        all_passed = false;
        err << "FAILED [" << name << "] " << c.name << ": observed " << c.observed
            << ", threshold " << c.threshold << '\n';
      }
    }
  }
  doc["passed"] = all_passed;
  out << doc.dump(2) << '\n';
  return all_passed ? kOk : kFailure;
}

int cmd_oracle_fd(const Options& o, std::ostream& out) {
  verify::FdConfig cfg;
  cfg.grid_points = o.grid;
  cfg.radius = o.radius;
  cfg.angular_order = o.order;
  if (o.bc == "dirichlet") {
    cfg.bc = verify::RadialBoundary::Dirichlet;
  } else if (o.bc == "dbar-neumann") {
    cfg.bc = verify::RadialBoundary::DbarNeumann;
  } else {
    throw CLI::ValidationError("--bc", "expected dirichlet or dbar-neumann");
  }
  const auto values = verify::fd_radial_eigs(cfg, o.count);
  if (o.format == "json") {
    json doc = {{"schema_version", kSchemaVersion}, {"order", o.order},
                {"bc", std::string(verify::to_string(cfg.bc))}, {"grid", o.grid},
                {"radius", o.radius}, {"eigenvalues", values}};
    out << doc.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << fixed17(values[i]) << '\n';
  }
  return kOk;
}

int cmd_inverse(const Options& o, std::ostream& out) {
  const SampledGrid grid = read_grid_file(o.input);
  ZeroCache cache;
  const Expansion x = expand(grid, o.truncation, o.p_max, cache);
  const Expansion inv = apply_inverse(x);
  json doc = to_json(inv);
  doc["schema_version"] = kSchemaVersion;
  doc["input_l2_norm"] = std::sqrt(squared_norm(grid));
  doc["projected_l2_norm"] = l2_norm(x);
  if (o.output.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    std::ofstream f(o.output);
    if (!f) throw Error("cannot open " + o.output + " for writing");
    f << doc.dump(2) << '\n';
  }
  if (!o.output_grid.empty()) {
    const Polydisc P(grid.radii);
    const SampledGrid result = sample_grid(
        P, grid.J, grid.radial_nodes, grid.angular_nodes,
        [&](std::span<const std::complex<double>> z) {
          return synthesize(inv, FormPoint(P, {z.begin(), z.end()}));
        });
    write_grid_file(o.output_grid, result);
  }
  return kOk;
}

int cmd_sample(const Options& o) {
  const Polydisc P(parse_list(o.radii));
  FormIndex J;
  for (double v : parse_list(o.J)) {
    if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw InvalidArgument("--J entries must be positive integers");
    }
    J.push_back(static_cast<std::size_t>(v) - 1);
  }
  CoefficientFunction f;
  if (o.function == "one") {
    f = [](std::span<const std::complex<double>>) { return std::complex<double>(1.0, 0.0); };
  } else if (o.function == "bottom") {
    ZeroCache cache;
    const Bottom b = bottom(P, static_cast<int>(J.size()), cache);
    const auto basis = expansion_basis(P, J, 4.0 * b.value + 50.0, 0, cache);
    if (basis.empty()) throw InvalidArgument("no eigenmode for this J");
    const EigenMode mode = basis.front();
    f = [P, mode](std::span<const std::complex<double>> z) {
      return eval_coefficient(mode, FormPoint(P, {z.begin(), z.end()}));
    };
  } else {
    throw CLI::ValidationError("--function", "expected one or bottom");
  }
  const std::vector<int> rn(P.dimension(), o.radial_nodes);
  const std::vector<int> an(P.dimension(), o.angular_nodes);
  write_grid_file(o.output, sample_grid(P, J, rn, an, f));
  return kOk;
}

}  // namespace

json to_json(const ModeFactor& f) {
  return {{"kind", std::string(to_string(f.kind))},
          {"angular_order", f.angular_order},
          {"radial_index", f.radial_index},
          {"radius", f.radius},
          {"bessel_zero", f.bessel_zero},
          {"lambda_k", f.lambda_k}};
}

json to_json(const EigenMode& m) {
  json factors = json::array();
  for (const auto& f : m.factors) factors.push_back(to_json(f));
  return {{"J", one_based(m.J)},
          {"value", m.value},
          {"family", std::string(to_string(m.family()))},
          {"factors", factors}};
}

json to_json(const SpectralPoint& p) {
  json families = json::array();
  for (ModeFamily f : p.families()) families.push_back(std::string(to_string(f)));
  json witnesses = json::array();
  for (const auto& w : p.witnesses) witnesses.push_back(to_json(w));
  return {{"value", p.value},
          {"finite_multiplicity", p.finite_multiplicity},
          {"infinite", p.infinite},
          {"mode_count", p.mode_count},
          {"families", families},
          {"witnesses", witnesses}};
}

json to_json(const OutputRecord& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  return {{"schema_version", r.schema_version},
          {"request", {{"radii", r.radii},
                       {"q", r.q},
                       {"max_lambda", r.max_lambda},
                       {"group_tol", r.group_tol},
                       {"witnesses", r.witnesses}}},
          {"points", points}};
}

json to_json(const verify::SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"observed", c.observed},
                      {"threshold", c.threshold},
                      {"detail", c.detail}});
  }
  return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

json to_json(const Expansion& x) {
  json terms = json::array();
  for (const auto& t : x.terms) {
    terms.push_back({{"mode", to_json(t.mode)},
                     {"re", t.coefficient.real()},
                     {"im", t.coefficient.imag()}});
  }
  return {{"J", one_based(x.J)},
          {"truncation_lambda", x.truncation_lambda},
          {"holomorphic_max_exponent", x.holomorphic_max_exponent},
          {"terms", terms}};
}

ModeFactor factor_from_json(const json& j) {
  ModeFactor f;
  f.kind = kind_from(j.at("kind").get<std::string>());
  f.angular_order = j.at("angular_order").get<int>();
  f.radial_index = j.at("radial_index").get<int>();
  f.radius = j.at("radius").get<double>();
  f.bessel_zero = j.at("bessel_zero").get<double>();
  f.lambda_k = j.at("lambda_k").get<double>();
  return f;
}

EigenMode mode_from_json(const json& j) {
  EigenMode m;
  m.J = zero_based(j.at("J"));
  m.value = j.at("value").get<double>();
  for (const auto& f : j.at("factors")) m.factors.push_back(factor_from_json(f));
  return m;
}

SpectralPoint point_from_json(const json& j) {
  SpectralPoint p;
  p.value = j.at("value").get<double>();
  p.finite_multiplicity = j.at("finite_multiplicity").get<std::size_t>();
  p.infinite = j.at("infinite").get<bool>();
  p.mode_count = j.at("mode_count").get<std::size_t>();
  for (const auto& w : j.at("witnesses")) p.witnesses.push_back(mode_from_json(w));
  return p;
}

OutputRecord record_from_json(const json& j) {
  OutputRecord r;
  r.schema_version = j.at("schema_version").get<std::string>();
  const json& req = j.at("request");
  r.radii = req.at("radii").get<std::vector<double>>();
  r.q = req.at("q").get<int>();
  r.max_lambda = req.at("max_lambda").get<double>();
  r.group_tol = req.at("group_tol").get<double>();
  r.witnesses = req.at("witnesses").get<std::size_t>();
  for (const auto& p : j.at("points")) r.points.push_back(point_from_json(p));
  return r;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("malformed number '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::invalid_argument("empty list");
  }
  return values;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectrum of the dbar-Neumann Laplacian on polydiscs", "polyspec"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto* zeros = app.add_subcommand("zeros", "Positive zeros lambda_{m,j} of J_m");
  zeros->add_option("--order", o.order, "Bessel order m")->required();
  zeros->add_option("--count", o.count, "Number of zeros")->capture_default_str();
  zeros->add_option("--tol", o.tol, "Relative enclosure width")->capture_default_str();
  zeros->add_option("--format", o.format, "table, csv or json")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues up to a cutoff, grouped");
  spectrum->add_option("--radii", o.radii, "Comma-separated radii a_1,...,a_n")->required();
  spectrum->add_option("--q", o.q, "Form degree, 1 <= q <= n-1")->capture_default_str();
  spectrum->add_option("--max", o.max_lambda, "Eigenvalue cutoff")->capture_default_str();
  spectrum->add_option("--group-tol", o.group_tol, "Relative grouping tolerance")
      ->capture_default_str();
  spectrum->add_option("--witnesses", o.witnesses, "Witness modes per point")
      ->capture_default_str();
  spectrum->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  spectrum->add_option("--format", o.format, "table, csv or json")->capture_default_str();

  auto* bottom_cmd = app.add_subcommand("bottom", "Bottom of the spectrum");
  bottom_cmd->add_option("--radii", o.radii, "Comma-separated radii")->required();
  bottom_cmd->add_option("--q", o.q, "Form degree")->capture_default_str();
  bottom_cmd->add_option("--format", o.format, "table or json")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd
      ->add_option("--suite", o.suite,
                   "all, bessel, zeros, modes, spectrum-oracle, forms or fd")
      ->capture_default_str();
  verify_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "Independent oracles");
  oracle_cmd->require_subcommand(1);
  auto* fd = oracle_cmd->add_subcommand("fd", "Finite-difference radial eigenvalues");
  fd->add_option("--order", o.order, "Angular order m")->capture_default_str();
  fd->add_option("--bc", o.bc, "dirichlet or dbar-neumann")->capture_default_str();
  fd->add_option("--grid", o.grid, "Grid points")->capture_default_str();
  fd->add_option("--count", o.count, "Eigenvalues to report (<= 10)")->capture_default_str();
  fd->add_option("--radius", o.radius, "Disc radius")->capture_default_str();
  fd->add_option("--format", o.format, "table or json")->capture_default_str();

  auto* inverse = app.add_subcommand("inverse", "Apply the inverse to a sampled grid file");
  inverse->add_option("--input", o.input, "PSPC grid file")->required();
  inverse->add_option("--output", o.output, "JSON output path (stdout if empty)");
  inverse->add_option("--output-grid", o.output_grid, "Write the result sampled on the input grid");
  inverse->add_option("--truncation", o.truncation, "Eigenvalue truncation")
      ->capture_default_str();
  inverse->add_option("--p-max", o.p_max, "Largest holomorphic exponent")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Write a PSPC grid file of a test function");
  sample->add_option("--radii", o.radii, "Comma-separated radii")->required();
  sample->add_option("--J", o.J, "Comma-separated 1-based form index")->capture_default_str();
  sample->add_option("--radial-nodes", o.radial_nodes, "Gauss-Legendre nodes per radius")
      ->capture_default_str();
  sample->add_option("--angular-nodes", o.angular_nodes, "Trapezoid nodes per angle")
      ->capture_default_str();
  sample->add_option("--function", o.function, "one or bottom")->capture_default_str();
  sample->add_option("--output", o.output, "Output path")->required();

  try {
    app.parse(argc, argv);
    if (zeros->parsed()) {
      check_format(o.format, {"table", "csv", "json"});
      return cmd_zeros(o, out);
    }
    if (spectrum->parsed()) {
      check_format(o.format, {"table", "csv", "json"});
      return cmd_spectrum(o, out);
    }
    if (bottom_cmd->parsed()) {
      check_format(o.format, {"table", "json"});
      return cmd_bottom(o, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (fd->parsed()) {
      check_format(o.format, {"table", "json"});
      return cmd_oracle_fd(o, out);
    }
    if (inverse->parsed()) return cmd_inverse(o, out);
    if (sample->parsed()) return cmd_sample(o);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kRange;
  } catch (const UnsupportedRange& e) {
    err << "error: " << e.what() << '\n';
    return kRange;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace polyspec::cli
