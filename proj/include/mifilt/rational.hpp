#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mifilt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent entries and lengths.  Arithmetic on these is overflow-checked:
/// quantities that genuinely grow without bound (p^e, ceil(c*p^e), series
/// coefficients) are carried as BigInt/Rational instead.
using Exp = std::int64_t;

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in exponent arithmetic") {}
};

inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline BigInt rat_floor(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline BigInt rat_ceil(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt t = n / d;
  if (n > 0 && t * d != n) ++t;
  return t;
}

inline Exp to_exp(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError();
  return static_cast<Exp>(v);
}

inline Rational frac_in_unit(const Rational& c) {
  // fractional part mapped into (0, 1]: integers map to 1
  Rational f = c - Rational(rat_ceil(c) - 1);
  return f;
}

inline BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - (k - i);
    r /= i;
  }
  return r;
}

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace mifilt
