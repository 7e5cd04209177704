#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyspec/errors.hpp"
#include "polyspec/verify.hpp"
#include "reference_values.hpp"

using namespace polyspec;
using namespace polyspec::verify;
namespace ref = polyspec::testref;

TEST_CASE("fd_radial_eigs: Dirichlet m=0") {
  FdConfig cfg;
  cfg.grid_points = 4000;
  const auto v = fd_radial_eigs(cfg, 2);
  CHECK(std::abs(v[0] - ref::kLambda01Sq) < 5e-3 * ref::kLambda01Sq);
  CHECK(v[0] < v[1]);
}

TEST_CASE("fd_radial_eigs: dbar-Neumann boundary") {
  FdConfig cfg;
  cfg.bc = RadialBoundary::DbarNeumann;
  auto v = fd_radial_eigs(cfg, 2);
  CHECK(std::abs(v[0]) < 1e-6);
  CHECK(v[1] == doctest::Approx(ref::kLambda11Sq).epsilon(1e-4));

  cfg.angular_order = -1;
  v = fd_radial_eigs(cfg, 1);
  CHECK(v[0] > 1.0);
  CHECK(v[0] == doctest::Approx(ref::kLambda01Sq).epsilon(1e-4));
}

TEST_CASE("fd_radial_eigs: configuration errors") {
  FdConfig cfg;
  cfg.grid_points = 10;
  CHECK_THROWS_AS(fd_radial_eigs(cfg, 1), InvalidArgument);
  cfg = {};
  cfg.radius = -1.0;
  CHECK_THROWS_AS(fd_radial_eigs(cfg, 1), InvalidArgument);
  CHECK_THROWS_AS(fd_radial_eigs(FdConfig{}, 0), InvalidArgument);
  CHECK_THROWS_AS(fd_radial_eigs(FdConfig{}, 11), InvalidArgument);
}

TEST_CASE("fd_convergence is second order") {
  FdConfig cfg;
  cfg.angular_order = 2;
  cfg.radius = 1.5;
  ZeroCache cache;
  const double exact = std::pow(cache.zero(2, 1) / 1.5, 2);
  const auto conv = fd_convergence(cfg, 0, exact, {250, 500, 1000, 2000});
  CHECK(conv.observed_order == doctest::Approx(2.0).epsilon(0.15));
  CHECK(std::abs(conv.extrapolated - exact) < 1e-6 * exact);
}

TEST_CASE("quad_inner_product") {
  ZeroCache cache;
  CHECK(std::abs(quad_inner_product(0, 1, 2, cache)) < 1e-10);
  CHECK(quad_inner_product(0, 1, 1, cache) ==
        doctest::Approx(ref::kHalfJ1AtLambda01Sq).epsilon(1e-10));
  CHECK(std::abs(quad_inner_product(2, 1, 3, cache)) < 1e-10);
}

TEST_CASE("brute_force_spectrum matches the enumerator") {
  ZeroCache cache;
  for (const auto& radii : {std::vector<double>{1.0, 1.0},
                            std::vector<double>{1.0, std::numbers::sqrt2}}) {
    const Polydisc P(radii);
    const auto oracle = brute_force_spectrum(P, 1, 10.0, 30, 30, cache);
    const auto modes = enumerate_modes(P, 1, 10.0, cache);
    REQUIRE(oracle.modes.size() == modes.size());
    std::vector<ModeDescriptor> a;
    std::vector<ModeDescriptor> b;
    for (const auto& m : oracle.modes) a.push_back(m.descriptor);
    for (const auto& m : modes) b.push_back(describe(m));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(oracle.smallest_excluded > 10.0);
  }
  CHECK(brute_force_spectrum(Polydisc({1.0, 1.0}), 1, 1.0, 10, 10, cache).modes.empty());
}

TEST_CASE("brute_force_spectrum refuses insufficient bounds") {
  ZeroCache cache;
  CHECK_THROWS_AS(brute_force_spectrum(Polydisc({1.0, 1.0}), 1, 30.0, 2, 2, cache),
                  OracleInsufficient);
}

TEST_CASE("describe formats factors") {
  ZeroCache cache;
  const auto modes = enumerate_modes(Polydisc({1.0, 1.0}), 1, 1.5, cache);
  CHECK(describe(modes[0]).to_string() == "J=[1] D(0,1) H(0)");
}

TEST_CASE("run_suite: every suite passes and is deterministic") {
  ZeroCache cache;
  for (const auto& name : suite_names()) {
    const SuiteReport a = run_suite(name, 42, cache);
    const SuiteReport b = run_suite(name, 42, cache);
    CHECK_MESSAGE(a.passed(), name);
    CHECK(!a.checks.empty());
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].observed == b.checks[i].observed);
    }
  }
  CHECK_THROWS_AS(run_suite("nope", 1, cache), InvalidArgument);
}
