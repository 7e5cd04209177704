#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polyspec/bessel.hpp"
#include "polyspec/eigenforms.hpp"
#include "polyspec/errors.hpp"
#include "reference_values.hpp"

using namespace polyspec;
namespace ref = polyspec::testref;

namespace {

EigenMode make_mode(FormIndex J, std::vector<ModeFactor> factors) {
  EigenMode m;
  m.J = std::move(J);
  m.factors = std::move(factors);
  m.value = eigenvalue(m);
  return m;
}

}  // namespace

TEST_CASE("eval_coefficient: reference value") {
  ZeroCache cache;
  const Polydisc P({1.0, 1.0});
  const auto mode = make_mode({0}, {ModeFactor::dirichlet(0, 1, 1.0, cache),
                                    ModeFactor::holomorphic(0, 1.0)});
  const FormPoint p(P, {{0.5, 0.0}, {0.0, 0.3}});
  const auto u = eval_coefficient(mode, p);
  CHECK(u.real() == doctest::Approx(ref::kJ0AtHalfLambda01).epsilon(1e-13));
  CHECK(std::abs(u.imag()) < 1e-15);
}

TEST_CASE("eval_coefficient vanishes on the Dirichlet boundary") {
  ZeroCache cache;
  const Polydisc P({1.0, 2.0});
  for (const auto& mode : enumerate_modes(P, 1, 12.0, cache)) {
    const std::size_t k = mode.J[0];
    for (double th : {0.0, 1.1, 4.0}) {
      std::vector<double> r = {0.4, 0.9};
      r[k] = P.radius(k);
      const auto p = FormPoint::from_polar(P, r, {th, 2.0 * th});
      CHECK(std::abs(eval_coefficient(mode, p)) < 1e-11);
    }
  }
}

TEST_CASE("FormPoint rejects points outside the closed polydisc") {
  const Polydisc P({1.0, 1.0});
  CHECK_THROWS_AS(FormPoint(P, {{1.2, 0.0}, {0.0, 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(FormPoint(P, {{0.2, 0.0}}), InvalidArgument);
  CHECK_NOTHROW(FormPoint(P, {{1.0, 0.0}, {0.0, -1.0}}));
}

TEST_CASE("laplacian_residual") {
  ZeroCache cache;
  const Polydisc P({1.0, 1.3});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::uniform_real_distribution<double> th(0.0, 2.0 * std::numbers::pi);
  for (const auto& mode : enumerate_modes(P, 1, 20.0, cache)) {
    for (int i = 0; i < 5; ++i) {
      const auto p = FormPoint::from_polar(P, {u(rng), 1.3 * u(rng)}, {th(rng), th(rng)});
      if (std::abs(eval_coefficient(mode, p)) < 1e-6) continue;
      CHECK(laplacian_residual(mode, p) < 1e-8);
      const double bumped = laplacian_residual(mode, p, mode.value * 1.01);
      CHECK(bumped == doctest::Approx(0.01).epsilon(0.05));
    }
  }
}

TEST_CASE("box_coefficient equals value times coefficient") {
  ZeroCache cache;
  const Polydisc P({1.0, 1.0});
  const auto mode = make_mode({1}, {ModeFactor::neumann(2, 1, 1.0, cache),
                                    ModeFactor::dirichlet(-3, 2, 1.0, cache)});
  const auto p = FormPoint::from_polar(P, {0.6, 0.35}, {0.7, 2.9});
  const auto lhs = box_coefficient(mode, p);
  const auto rhs = mode.value * eval_coefficient(mode, p);
  CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
}

TEST_CASE("factor_laplacian is exactly zero for holomorphic factors") {
  const auto h = ModeFactor::holomorphic(4, 2.0);
  CHECK(factor_laplacian(h, {0.3, 0.8}) == std::complex<double>(0.0, 0.0));
  CHECK(factor_dbar(h, {0.3, 0.8}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("dbar_boundary_residual") {
  ZeroCache cache;
  CHECK(dbar_boundary_residual(ModeFactor::holomorphic(3, 1.0), 0.4) < 1e-15);
  const auto n = ModeFactor::neumann(0, 1, 1.0, cache);
  const double expected_scale = std::abs(bessel_j(1, cache.zero(1, 1))) / 2.0;
  CHECK(expected_scale < 1e-11);
  for (double th : {0.0, 1.0, 2.5}) CHECK(dbar_boundary_residual(n, th) < 1e-11);
  const auto d = ModeFactor::dirichlet(0, 1, 1.0, cache);
  CHECK(dbar_boundary_residual(d, 0.3) > 1e-2);

  const Polydisc P({1.0, 1.0});
  const auto mode = make_mode({0}, {d, n});
  CHECK(dbar_boundary_residual(mode, 1, 0.9) < 1e-10);
  CHECK_THROWS_AS(dbar_boundary_residual(mode, 0, 0.9), InvalidArgument);
}

TEST_CASE("factor_dbar of a Neumann factor vanishes on every boundary of the unit disc") {
  ZeroCache cache;
  for (const auto& f : neumann_factors(1.0, 60.0, cache)) {
    CHECK(dbar_boundary_residual(f, 0.77) < 1e-10 * std::max(1.0, std::sqrt(f.lambda_k)));
  }
}
