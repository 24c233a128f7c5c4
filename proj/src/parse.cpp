#include "mifilt/parse.hpp"

#include <cctype>

namespace mifilt {

std::string rational_to_string(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational rational_from_string(const std::string& s) { return parse_rational(s); }

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(i, what); }

  Exp integer() {
    skip_ws();
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) fail("expected integer");
    Exp v = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      v = checked_add(checked_mul(v, 10), s[i] - '0');
      ++i;
    }
    return v;
  }

  // variable index (0-based), or -1
  int variable() {
    skip_ws();
    if (i >= s.size()) return -1;
    char c = s[i];
    int idx = -1;
    if (c == 'x') {
      ++i;
      if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
        Exp n = integer();
        if (n < 1) fail("variable index must be positive");
        idx = static_cast<int>(n) - 1;
      } else {
        idx = 0;
      }
    } else if (c == 'y') {
      ++i;
      idx = 1;
    } else if (c == 'z') {
      ++i;
      idx = 2;
    } else if (c == 'w') {
      ++i;
      idx = 3;
    } else {
      return -1;
    }
    if (idx >= 4) fail("at most 4 variables are supported");
    return idx;
  }
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, Exp characteristic) {
  Scanner sc{text};
  std::vector<std::vector<Exp>> terms;
  int max_var = 0;

  if (sc.done()) throw ParseError(sc.i, "empty ideal expression");
  do {
    std::vector<Exp> exps(4, 0);
    // term := factor ("*" factor)*
    bool first_factor = true;
    do {
      sc.skip_ws();
      int var = sc.variable();
      if (var < 0) {
        if (first_factor && sc.peek('1')) {  // allow the unit generator "1"
          sc.eat('1');
          break;
        }
        sc.fail("expected variable");
      }
      Exp power = 1;
      if (sc.eat('^')) {
        power = sc.integer();
        if (power < 1) sc.fail("exponent must be positive");
      }
      exps[static_cast<size_t>(var)] = checked_add(exps[static_cast<size_t>(var)], power);
      max_var = std::max(max_var, var + 1);
      first_factor = false;
    } while (sc.eat('*'));
    terms.push_back(std::move(exps));
  } while (sc.eat(','));
  if (!sc.done()) sc.fail("unexpected trailing input");

  if (max_var == 0) max_var = 1;
  std::vector<ExponentVector> gens;
  gens.reserve(terms.size());
  for (auto& t : terms)
    gens.push_back(ExponentVector(std::vector<Exp>(t.begin(), t.begin() + max_var)));
  return MonomialIdeal::make(max_var, std::move(gens), characteristic);
}

Rational parse_rational(const std::string& text) {
  Scanner sc{text};
  sc.skip_ws();
  bool negative = sc.eat('-');
  Exp num = sc.integer();
  Exp den = 1;
  if (sc.eat('/')) {
    den = sc.integer();
    if (den == 0) sc.fail("zero denominator");
  }
  if (!sc.done()) sc.fail("unexpected trailing input");
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

}  // namespace mifilt
