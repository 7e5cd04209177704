#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "polyspec/bessel.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/zeros.hpp"
#include "reference_values.hpp"

using namespace polyspec;
namespace ref = polyspec::testref;

TEST_CASE("j0_bracket") {
  const Interval b0 = j0_bracket(0);
  CHECK(b0.lo == doctest::Approx(std::numbers::pi / 2));
  CHECK(b0.hi == doctest::Approx(std::numbers::pi));
  CHECK(b0.contains(ref::kLambda01));
  const Interval b1 = j0_bracket(1);
  CHECK(b1.lo == doctest::Approx(1.5 * std::numbers::pi));
  CHECK(b1.hi == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(b1.contains(ref::kLambda02));
  CHECK_THROWS_AS(j0_bracket(-1), InvalidArgument);
}

TEST_CASE("zero: reference values") {
  ZeroCache cache;
  CHECK(cache.zero(0, 1) == doctest::Approx(ref::kLambda01).epsilon(1e-14));
  CHECK(cache.zero(1, 1) == doctest::Approx(ref::kLambda11).epsilon(1e-14));
  CHECK(cache.zero(0, 2) == doctest::Approx(ref::kLambda02).epsilon(1e-14));
  CHECK(cache.zero(3, 2) == doctest::Approx(ref::kLambda32).epsilon(1e-14));
  CHECK(cache.zero(5, 1) == doctest::Approx(ref::kLambda51).epsilon(1e-14));
  CHECK(cache.zero(0, 1) < cache.zero(1, 1));
  CHECK(cache.zero(1, 1) < cache.zero(0, 2));
  CHECK(zero(-3, 2, cache) == cache.zero(3, 2));
}

TEST_CASE("zero: certified enclosures contain the value") {
  ZeroCache cache;
  for (int m = 0; m <= 6; ++m) {
    for (int j = 1; j <= 6; ++j) {
      const CertifiedZero c = cache.certified(m, j);
      CHECK(c.enclosure.lo <= c.value);
      CHECK(c.value <= c.enclosure.hi);
      CHECK(c.enclosure.width() <= 1e-12 * c.value);
      CHECK(std::abs(bessel_j(m, c.value)) < 1e-11);
    }
  }
}

TEST_CASE("zeros_upto") {
  ZeroCache cache;
  const auto z3 = zeros_upto(0, 3.0, cache);
  REQUIRE(z3.size() == 1);
  CHECK(z3[0] == doctest::Approx(ref::kLambda01).epsilon(1e-14));
  CHECK(zeros_upto(0, 2.0, cache).empty());
  CHECK(zeros_upto(5, cache.zero(5, 1), cache).size() == 1);
  const auto many = zeros_upto(2, 60.0, cache);
  for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i - 1] < many[i]);
  CHECK(many.back() <= 60.0);
}

TEST_CASE("zero: window errors") {
  ZeroCache cache;
  CHECK_THROWS_AS(cache.zero(0, 0), InvalidArgument);
  CHECK_THROWS_AS(cache.zero(151, 1), UnsupportedRange);
  CHECK_THROWS_AS(cache.zero(0, 201), UnsupportedRange);
}

TEST_CASE("property: interlacing and monotonicity") {
  ZeroCache cache;
  for (int m = 0; m <= 20; ++m) {
    for (int j = 1; j <= 20; ++j) {
      const double a = cache.zero(m, j);
      const double b = cache.zero(m + 1, j);
      const double c = cache.zero(m, j + 1);
      CHECK(a < b);
      CHECK(b < c);
    }
  }
}

TEST_CASE("property: concurrent lookups agree with a serial cache") {
  ZeroCache shared;
  ZeroCache serial;
  std::vector<std::thread> workers;
  std::vector<std::vector<double>> seen(4);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (int m = 0; m <= 12; ++m) {
        for (int j = 1; j <= 10; ++j) seen[t].push_back(shared.zero((m + t) % 13, j));
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) {
    std::size_t i = 0;
    for (int m = 0; m <= 12; ++m) {
      for (int j = 1; j <= 10; ++j) CHECK(seen[t][i++] == serial.zero((m + t) % 13, j));
    }
  }
}
