#include "mifilt/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mifilt {

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly Poly::divided_by_one_minus_t() const {
  if (is_zero()) return Poly();
  if (eval_at_one() != 0)
    throw std::logic_error("polynomial not divisible by (1-T)");
  // num = q * (1-T): q_i = sum of num coefficients above i... synthetic division
  std::vector<BigInt> q(c_.size() - 1, BigInt(0));
  BigInt carry = 0;  // running partial sum from the top
  for (size_t i = c_.size(); i-- > 1;) {
    carry += c_[i];
    q[i - 1] = -carry;
  }
  return Poly(std::move(q));
}

Poly Poly::times_one_minus_t_power(int k) const {
  Poly result = *this;
  Poly omt({BigInt(1), BigInt(-1)});
  for (int i = 0; i < k; ++i) result = result * omt;
  return result;
}

UniRational UniRational::of(Poly num, int k) {
  if (k < 0) throw std::logic_error("negative denominator power");
  if (num.is_zero()) return UniRational{Poly(), 0};
  while (k > 0 && num.eval_at_one() == 0) {
    num = num.divided_by_one_minus_t();
    --k;
  }
  return UniRational{std::move(num), k};
}

UniRational operator+(const UniRational& a, const UniRational& b) {
  int k = std::max(a.k, b.k);
  Poly num = a.num.times_one_minus_t_power(k - a.k) + b.num.times_one_minus_t_power(k - b.k);
  return UniRational::of(std::move(num), k);
}

UniRational operator-(const UniRational& a, const UniRational& b) {
  int k = std::max(a.k, b.k);
  Poly num = a.num.times_one_minus_t_power(k - a.k) - b.num.times_one_minus_t_power(k - b.k);
  return UniRational::of(std::move(num), k);
}

UniRational operator*(const UniRational& a, const UniRational& b) {
  return UniRational::of(a.num * b.num, a.k + b.k);
}

Exp PoincareForm::common_denominator() const {
  Exp e = 1;
  for (const auto& [c, r] : classes)
    e = std::lcm(e, to_exp(boost::multiprecision::denominator(c)));
  return e;
}

Exp TruncatedSeries::common_denominator() const {
  Exp e = 1;
  for (const auto& [c, v] : terms)
    e = std::lcm(e, to_exp(boost::multiprecision::denominator(c)));
  return e;
}

TruncatedSeries expand(const UniRational& f, const Rational& n) {
  if (n < 0) throw std::invalid_argument("expansion order must be nonnegative");
  TruncatedSeries s;
  s.order = n;
  if (f.is_zero()) return s;
  const long top = static_cast<long>(to_exp(rat_floor(n)));
  // 1/(1-T)^k = sum C(j+k-1, k-1) T^j
  for (long j = 0; j <= top; ++j) {
    BigInt coeff = 0;
    for (int i = 0; i <= f.num.degree() && i <= j; ++i)
      coeff += f.num.coeff(static_cast<size_t>(i)) *
               (f.k == 0 ? BigInt(i == j ? 1 : 0) : binomial(BigInt(j - i + f.k - 1), f.k - 1));
    if (coeff != 0) s.terms[Rational(j)] = coeff;
  }
  return s;
}

TruncatedSeries expand(const PoincareForm& f, const Rational& n) {
  if (n < 0) throw std::invalid_argument("expansion order must be nonnegative");
  TruncatedSeries s;
  s.order = n;
  for (const auto& [c, r] : f.classes) {
    if (n < c) continue;
    TruncatedSeries part = expand(r, n - c);
    for (const auto& [j, v] : part.terms) s.terms[c + j] = v;
  }
  return s;
}

namespace {

std::string bigint_str(const BigInt& v) { return v.str(); }

// compact polynomial rendering used inside fractions: no spaces, ascending
// exponents, coefficient 1 suppressed except on the constant term
std::string poly_compact(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigInt& c = p.coeff(static_cast<size_t>(i));
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += (c < 0) ? "-" : "";
    else
      s += (c < 0) ? "-" : "+";
    if (i == 0)
      s += bigint_str(a);
    else {
      if (a != 1) s += bigint_str(a);
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

bool needs_parens(const Poly& p) {
  int nonzero = 0;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(static_cast<size_t>(i)) != 0) ++nonzero;
  if (nonzero > 1) return true;
  // single negative term also gets parenthesized
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(static_cast<size_t>(i)) < 0) return true;
  return false;
}

}  // namespace

std::string render(const PoincareForm& f) {
  if (f.is_zero()) return "0";
  const Exp e = f.common_denominator();
  int kmax = 0;
  for (const auto& [c, r] : f.classes) kmax = std::max(kmax, r.k);
  // numerator in z = T^{1/e}: sum over classes of num_c(z^e) z^{ce} (1-z^e)^{kmax-k_c}
  Poly zden({BigInt(1)});
  {
    std::vector<BigInt> omze(static_cast<size_t>(e) + 1, BigInt(0));
    omze[0] = 1;
    omze[static_cast<size_t>(e)] = -1;
    Poly base{std::move(omze)};
    Poly znum;
    for (const auto& [c, r] : f.classes) {
      Poly lifted;
      for (int i = 0; i <= r.num.degree(); ++i)
        lifted = lifted + Poly::monomial(r.num.coeff(static_cast<size_t>(i)),
                                         static_cast<size_t>(i) * static_cast<size_t>(e));
      Exp shift = to_exp(boost::multiprecision::numerator(Rational(c * e)));
      lifted = lifted * Poly::monomial(BigInt(1), static_cast<size_t>(shift));
      Poly clear = Poly::constant(1);
      for (int i = 0; i < kmax - r.k; ++i) clear = clear * base;
      znum = znum + lifted * clear;
    }
    const std::string var = (e == 1) ? "T" : "z";
    std::string num_str = poly_compact(znum, var);
    std::string out;
    if (kmax == 0) {
      out = num_str;
    } else {
      if (needs_parens(znum)) num_str = "(" + num_str + ")";
      std::string den = "(1-" + var + (e == 1 ? "" : "^" + std::to_string(e)) + ")";
      if (kmax > 1) den += "^" + std::to_string(kmax);
      out = num_str + "/" + den;
    }
    if (e != 1) out += " where z = T^(1/" + std::to_string(e) + ")";
    return out;
  }
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() const { return i >= s.size(); }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("series parse error at position " + std::to_string(i) + ": " + what);
  }
};

BigInt parse_uint(Cursor& cur) {
  if (cur.done() || !isdigit(static_cast<unsigned char>(cur.s[cur.i]))) cur.fail("expected digit");
  BigInt v = 0;
  while (!cur.done() && isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
    v = v * 10 + (cur.s[cur.i] - '0');
    ++cur.i;
  }
  return v;
}

// term := [sign] [coeff] [var [^ exponent]]
// polynomial in the compact grammar emitted by poly_compact
Poly parse_poly_compact(Cursor& cur, char var, size_t stop_hint) {
  std::map<size_t, BigInt> coeffs;
  bool first = true;
  while (!cur.done() && cur.i < stop_hint) {
    BigInt sign = 1;
    if (cur.eat('-'))
      sign = -1;
    else if (!first && !cur.eat('+'))
      break;
    first = false;
    BigInt coeff = 1;
    bool have_digits = !cur.done() && isdigit(static_cast<unsigned char>(cur.s[cur.i]));
    if (have_digits) coeff = parse_uint(cur);
    size_t deg = 0;
    if (!cur.done() && cur.s[cur.i] == var) {
      ++cur.i;
      deg = 1;
      if (cur.eat('^')) deg = static_cast<size_t>(to_exp(parse_uint(cur)));
    } else if (!have_digits) {
      cur.fail("expected coefficient or variable");
    }
    coeffs[deg] += sign * coeff;
  }
  size_t top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  std::vector<BigInt> c(top + 1, BigInt(0));
  for (auto& [d, v] : coeffs) c[d] = v;
  return Poly(std::move(c));
}

}  // namespace

PoincareForm parse_poincare_form(const std::string& text) {
  PoincareForm form;
  if (text == "0") return form;
  std::string body = text;
  Exp e = 1;
  const std::string where_tag = " where z = T^(1/";
  if (auto pos = text.find(where_tag); pos != std::string::npos) {
    std::string tail = text.substr(pos + where_tag.size());
    if (tail.empty() || tail.back() != ')')
      throw std::invalid_argument("series parse error: malformed where clause");
    e = to_exp(BigInt(tail.substr(0, tail.size() - 1)));
    body = text.substr(0, pos);
  }
  const char var = (e == 1) ? 'T' : 'z';
  // split off "/(1-var^e)^k" if present
  Poly znum;
  int kmax = 0;
  auto slash = body.rfind('/');
  if (slash != std::string::npos) {
    std::string den = body.substr(slash + 1);
    std::string expect = std::string("(1-") + var + (e == 1 ? "" : "^" + std::to_string(e)) + ")";
    if (den.rfind(expect, 0) != 0)
      throw std::invalid_argument("series parse error: unexpected denominator " + den);
    std::string rest = den.substr(expect.size());
    if (rest.empty())
      kmax = 1;
    else {
      if (rest[0] != '^') throw std::invalid_argument("series parse error: bad denominator power");
      kmax = static_cast<int>(to_exp(BigInt(rest.substr(1))));
    }
    std::string num = body.substr(0, slash);
    if (num.size() >= 2 && num.front() == '(' && num.back() == ')')
      num = num.substr(1, num.size() - 2);
    Cursor cur{num};
    znum = parse_poly_compact(cur, var, num.size());
    if (!cur.done()) cur.fail("trailing characters in numerator");
  } else {
    Cursor cur{body};
    znum = parse_poly_compact(cur, var, body.size());
    if (!cur.done()) cur.fail("trailing characters");
  }
  // split z-exponents by residue class mod e; residue 0 belongs to class 1
  for (Exp r = 0; r < e; ++r) {
    std::vector<BigInt> c;
    for (int i = r == 0 ? static_cast<int>(e) : static_cast<int>(r); i <= znum.degree();
         i += static_cast<int>(e)) {
      c.push_back(znum.coeff(static_cast<size_t>(i)));
    }
    Poly part{std::move(c)};
    if (part.is_zero()) continue;
    Rational cls = (r == 0) ? Rational(1) : Rational(r, e);
    form.classes[cls] = UniRational::of(std::move(part), kmax);
  }
  if (znum.coeff(0) != 0)
    throw std::invalid_argument("series parse error: nonzero constant term");
  return form;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigInt& c = p.coeff(static_cast<size_t>(i));
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += (c < 0) ? "-" : "";
    else
      s += (c < 0) ? " - " : " + ";
    if (i == 0)
      s += bigint_str(a);
    else {
      if (a != 1) s += bigint_str(a);
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::string to_string(const TruncatedSeries& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : s.terms) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    if (out.empty())
      out += (v < 0) ? "-" : "";
    else
      out += (v < 0) ? " - " : " + ";
    std::string expo;
    if (boost::multiprecision::denominator(c) == 1)
      expo = boost::multiprecision::numerator(c).str();
    else
      expo = "(" + rational_to_string(c) + ")";
    if (c == 0) {
      out += a.str();
      continue;
    }
    if (a != 1) out += a.str();
    out += "T";
    if (c != 1) out += "^" + expo;
  }
  return out;
}

}  // namespace mifilt
