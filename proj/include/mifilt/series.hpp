#pragma once

#include <map>
#include <string>
#include <vector>

#include "mifilt/rational.hpp"

namespace mifilt {

/// Dense integer polynomial in T; trailing zeros stripped; zero = empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(BigInt v) { return Poly({std::move(v)}); }
  static Poly monomial(const BigInt& coeff, size_t deg) {
    std::vector<BigInt> c(deg + 1, BigInt(0));
    c[deg] = coeff;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

  /// Exact division by (1 - T); requires eval_at_one() == 0.
  Poly divided_by_one_minus_t() const;
  Poly times_one_minus_t_power(int k) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// num(T) / (1-T)^k in normal form: (1-T) does not divide num unless k = 0.
struct UniRational {
  Poly num;
  int k = 0;

  static UniRational of(Poly num, int k);
  bool is_zero() const { return num.is_zero(); }
  bool operator==(const UniRational&) const = default;
};

UniRational operator+(const UniRational& a, const UniRational& b);
UniRational operator-(const UniRational& a, const UniRational& b);
UniRational operator*(const UniRational& a, const UniRational& b);

/// Finite sum over classes c in (0,1] of R_c(T) * T^c; zero classes absent.
struct PoincareForm {
  std::map<Rational, UniRational> classes;

  /// lcm of class denominators (1 for the zero form).
  Exp common_denominator() const;
  bool is_zero() const { return classes.empty(); }
  bool operator==(const PoincareForm&) const = default;
};

/// Truncated fractional-power series: ascending exponent -> nonzero coefficient.
struct TruncatedSeries {
  Rational order = 0;
  std::map<Rational, BigInt> terms;

  Exp common_denominator() const;
  bool operator==(const TruncatedSeries&) const = default;
};

/// Power-series coefficients of f up to T^floor(N).
TruncatedSeries expand(const UniRational& f, const Rational& n);
/// Class exponents shift by c; keeps every exponent <= N.
TruncatedSeries expand(const PoincareForm& f, const Rational& n);

/// Single-fraction rendering over Q(T^{1/e}); see the grammar notes in the
/// README.  Bit-exact output: ASCII, '^' powers, ascending exponents, no
/// spaces around '/'.
std::string render(const PoincareForm& f);

/// Inverse of render (accepts exactly the rendered grammar).
PoincareForm parse_poincare_form(const std::string& text);

std::string to_string(const Poly& p, const std::string& var = "T");
std::string to_string(const TruncatedSeries& s);

}  // namespace mifilt
