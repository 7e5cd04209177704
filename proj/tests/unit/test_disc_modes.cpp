#include <doctest.h>

#include <cmath>

#include "polyspec/bessel.hpp"
#include "polyspec/disc_modes.hpp"
#include "polyspec/errors.hpp"
#include "reference_values.hpp"

using namespace polyspec;
namespace ref = polyspec::testref;

TEST_CASE("dirichlet_factors") {
  ZeroCache cache;
  const auto six = dirichlet_factors(1.0, 6.0, cache);
  REQUIRE(six.size() == 1);
  CHECK(six[0].kind == FactorKind::Dirichlet);
  CHECK(six[0].angular_order == 0);
  CHECK(six[0].radial_index == 1);
  CHECK(six[0].lambda_k == doctest::Approx(ref::kLambda01Sq).epsilon(1e-14));

  const auto fifteen = dirichlet_factors(1.0, 15.0, cache);
  REQUIRE(fifteen.size() == 3);
  CHECK(fifteen[1].angular_order == -1);
  CHECK(fifteen[2].angular_order == 1);
  for (int i : {1, 2}) {
    CHECK(fifteen[i].lambda_k == doctest::Approx(ref::kLambda11Sq).epsilon(1e-14));
  }
  CHECK(dirichlet_factors(1.0, 5.0, cache).empty());
}

TEST_CASE("neumann_factors") {
  ZeroCache cache;
  const auto six = neumann_factors(1.0, 6.0, cache);
  REQUIRE(six.size() == 1);
  CHECK(six[0].kind == FactorKind::NeumannPositive);
  CHECK(six[0].angular_order == -1);
  CHECK(six[0].lambda_k == doctest::Approx(ref::kLambda01Sq).epsilon(1e-14));

  const auto fifteen = neumann_factors(1.0, 15.0, cache);
  REQUIRE(fifteen.size() == 3);
  CHECK(fifteen[1].angular_order == -2);
  CHECK(fifteen[2].angular_order == 0);
  for (int i : {1, 2}) {
    CHECK(fifteen[i].lambda_k == doctest::Approx(ref::kLambda11Sq).epsilon(1e-14));
    CHECK(fifteen[i].zero_order() == 1);
  }
}

TEST_CASE("factors scale with the radius") {
  ZeroCache cache;
  const auto f = ModeFactor::dirichlet(2, 3, 2.5, cache);
  CHECK(f.lambda_k == doctest::Approx(std::pow(cache.zero(2, 3) / 2.5, 2)).epsilon(1e-15));
  const auto small = dirichlet_factors(0.5, 40.0, cache);
  const auto big = dirichlet_factors(1.0, 40.0, cache);
  CHECK(small.size() <= big.size());
}

TEST_CASE("holomorphic factors") {
  const auto h = ModeFactor::holomorphic(0, 1.0);
  CHECK(h.lambda_k == 0.0);
  CHECK(radial_profile(h, 0.3) == 1.0);
  CHECK(radial_profile(ModeFactor::holomorphic(3, 2.0), 0.5) == doctest::Approx(0.125));
  CHECK_THROWS_AS(ModeFactor::holomorphic(-1, 1.0), InvalidArgument);
}

TEST_CASE("robin_residual") {
  ZeroCache cache;
  for (const auto& f : neumann_factors(1.7, 80.0, cache)) {
    CHECK(robin_residual(f) < 1e-10);
    ModeFactor bumped = f;
    bumped.lambda_k *= 1.01;
    CHECK(robin_residual(bumped) > 1e-3);
  }
  CHECK(std::abs(bessel_j(1, cache.zero(1, 1))) < 1e-11);
}

TEST_CASE("radial_profile") {
  ZeroCache cache;
  const auto d = ModeFactor::dirichlet(0, 1, 1.0, cache);
  CHECK(std::abs(radial_profile(d, 1.0)) < 1e-15);
  CHECK(radial_profile(d, 0.0) == 1.0);
  const auto n = ModeFactor::neumann(0, 1, 1.0, cache);
  CHECK(radial_profile(n, 1.0) == doctest::Approx(ref::kJ0AtLambda11).epsilon(1e-13));
  CHECK_THROWS_AS(radial_profile(d, 1.5), InvalidArgument);
  CHECK_THROWS_AS(radial_profile(d, -0.1), InvalidArgument);
}

TEST_CASE("radial derivatives satisfy the separated ODE") {
  ZeroCache cache;
  for (const auto& f : {ModeFactor::dirichlet(3, 2, 1.3, cache),
                        ModeFactor::neumann(-4, 1, 0.8, cache),
                        ModeFactor::neumann(2, 2, 2.0, cache)}) {
    const double m = f.angular_order;
    for (double t : {0.2, 0.5, 0.9}) {
      const double r = t * f.radius;
      const double res = radial_second_derivative(f, r) + radial_derivative(f, r) / r -
                         (m * m / (r * r)) * radial_profile(f, r) +
                         f.lambda_k * radial_profile(f, r);
      CHECK(std::abs(res) < 1e-9 * std::max(1.0, f.lambda_k));
    }
  }
}

TEST_CASE("compare_identity orders by kind, order, index and radius") {
  ZeroCache cache;
  const auto a = ModeFactor::dirichlet(-1, 1, 1.0, cache);
  const auto b = ModeFactor::dirichlet(1, 1, 1.0, cache);
  CHECK(compare_identity(a, b) == std::strong_ordering::less);
  CHECK(compare_identity(a, a) == std::strong_ordering::equal);
  CHECK(a.same_mode(a));
  CHECK_FALSE(a.same_mode(b));
  CHECK(to_string(FactorKind::NeumannPositive) == "neumann");
}
