#include "polyspec/bessel_oracle.hpp"

#include <cmath>
#include <cstdlib>

#include "polyspec/errors.hpp"

namespace polyspec::oracle {

namespace {

// Decimal digits lost to cancellation: the largest series term is
// roughly exp(z) for z >= 0.
int guard_digits(double z) {
  return static_cast<int>(std::ceil(z / std::log(10.0))) + 10;
}

// Restores the default mpfr precision on scope exit. Not thread-safe: the
// default precision is process-wide in this Boost version.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : saved_(HighPrecision::default_precision()) {
    HighPrecision::default_precision(digits10);
  }
  ~PrecisionGuard() { HighPrecision::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

}  // namespace

HighPrecision bessel_j(int m, const Rational& z, int digits) {
  if (digits < 1 || digits > 100) {
    throw InvalidArgument("oracle: digits must lie in [1, 100]");
  }
  if (z < 0) {
    throw InvalidArgument("oracle: argument must be non-negative");
  }
  const int order = std::abs(m);
  const double z_approx = z.convert_to<double>();
  const unsigned working = static_cast<unsigned>(digits + guard_digits(z_approx) +
                                                 order / 2 + 10);

  PrecisionGuard guard(working);

  HighPrecision half = HighPrecision(z) / 2;
  HighPrecision term = 1;
  for (int k = 1; k <= order; ++k) {
    term *= half / k;
  }
  const HighPrecision step = -half * half;
  const HighPrecision tolerance = boost::multiprecision::pow(HighPrecision(10), -(digits + 2));

  HighPrecision sum = term;
  for (long l = 1;; ++l) {
    term *= step / (HighPrecision(l) * (l + order));
    sum += term;
    // Once the ratio of consecutive terms is at most 1/2 the tail is
    // bounded by twice the next term.
    const HighPrecision ratio = (half * half) / (HighPrecision(l + 1) * (l + 1 + order));
    if (ratio <= HighPrecision(0.5)) {
      const HighPrecision next = abs(term) * ratio;
      if (2 * next < tolerance) {
        break;
      }
    }
  }
  if (m < 0 && (order % 2 != 0)) {
    sum = -sum;
  }
  return sum;
}

HighPrecision bessel_j(int m, double z, int digits) {
  if (!std::isfinite(z)) {
    throw InvalidArgument("oracle: non-finite argument");
  }
  return bessel_j(m, Rational(z), digits);
}

double bessel_j_double(int m, double z, int digits) {
  return bessel_j(m, z, digits).convert_to<double>();
}

}  // namespace polyspec::oracle
