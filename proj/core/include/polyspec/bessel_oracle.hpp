#pragma once

// Arbitrary-precision reference values for J_m, summed directly from the
// power series. Intended as ground truth for tests; it is slow.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace polyspec::oracle {

using HighPrecision = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;

/// J_m(z) to `digits` correct decimal digits (absolute), digits <= 100.
/// The working precision grows with z to absorb the cancellation of the
/// alternating series, and summation stops only once the remaining tail is
/// rigorously bounded below 10^-(digits+2).
HighPrecision bessel_j(int m, const Rational& z, int digits = 50);

/// Convenience overload: a double is an exact dyadic rational.
HighPrecision bessel_j(int m, double z, int digits = 50);

/// Rounded to the nearest double.
double bessel_j_double(int m, double z, int digits = 40);

}  // namespace polyspec::oracle
