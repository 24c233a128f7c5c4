#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mifilt/series.hpp"

using namespace mifilt;

namespace {

UniRational ur(std::vector<BigInt> num, int k) { return UniRational::of(Poly(std::move(num)), k); }

UniRational random_unirational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kdist(0, 4), degdist(0, 4), cdist(-5, 5);
  std::vector<BigInt> c(static_cast<size_t>(degdist(rng)) + 1);
  for (auto& x : c) x = cdist(rng);
  return ur(std::move(c), kdist(rng));
}

}  // namespace

TEST_CASE("rational arithmetic normal forms") {
  UniRational a = ur({1}, 1);
  CHECK((a + (ur({-1}, 1))).is_zero());

  // (T - T^2)/(1-T)^3 = T/(1-T)^2
  UniRational diff = ur({0, 1}, 3) - ur({0, 0, 1}, 3);
  CHECK(diff == ur({0, 1}, 2));

  CHECK(a * a == ur({1}, 2));
}

TEST_CASE("ring laws on random normal forms") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    UniRational a = random_unirational(rng), b = random_unirational(rng),
                c = random_unirational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("expansion examples") {
  TruncatedSeries s = expand(ur({1}, 1), 3);
  CHECK(s.terms == std::map<Rational, BigInt>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  TruncatedSeries t = expand(ur({0, 1}, 2), 4);
  CHECK(t.terms == std::map<Rational, BigInt>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});

  PoincareForm pf;
  pf.classes[Rational(1)] = ur({0, 1}, 2);
  TruncatedSeries u = expand(pf, 4);
  CHECK(u.terms == std::map<Rational, BigInt>{{2, 1}, {3, 2}, {4, 3}});
}

TEST_CASE("expansion is additive") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 100; ++trial) {
    UniRational a = random_unirational(rng), b = random_unirational(rng);
    TruncatedSeries sum = expand(a + b, 30);
    TruncatedSeries ea = expand(a, 30), eb = expand(b, 30);
    std::map<Rational, BigInt> termwise = ea.terms;
    for (const auto& [c, v] : eb.terms) {
      termwise[c] += v;
      if (termwise[c] == 0) termwise.erase(c);
    }
    CHECK(sum.terms == termwise);
  }
}

TEST_CASE("rendering examples") {
  PoincareForm pf;
  pf.classes[Rational(1)] = ur({0, 1}, 2);
  CHECK(render(pf) == "T^2/(1-T)^2");

  CHECK(render(PoincareForm{}) == "0");

  PoincareForm frac;
  frac.classes[Rational(5, 6)] = ur({1}, 1);
  CHECK(render(frac) == "z^5/(1-z^6) where z = T^(1/6)");
}

TEST_CASE("render/parse round trip") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> cls_count(0, 3), numden(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    PoincareForm pf;
    int n = cls_count(rng);
    for (int i = 0; i < n; ++i) {
      Exp den = numden(rng);
      Exp num = std::uniform_int_distribution<Exp>(1, den)(rng);
      UniRational r = random_unirational(rng);
      if (!r.is_zero()) pf.classes[Rational(num, den)] = r;
    }
    PoincareForm back = parse_poincare_form(render(pf));
    CHECK(back == pf);
  }
}

TEST_CASE("truncated series rendering") {
  TruncatedSeries s;
  s.order = 4;
  s.terms[Rational(2)] = 1;
  s.terms[Rational(3)] = 2;
  s.terms[Rational(4)] = 3;
  CHECK(to_string(s) == "T^2 + 2T^3 + 3T^4");

  TruncatedSeries f;
  f.order = 1;
  f.terms[Rational(5, 6)] = 1;
  CHECK(to_string(f) == "T^(5/6)");
  CHECK(to_string(TruncatedSeries{}) == "0");
}

TEST_CASE("common denominators") {
  PoincareForm pf;
  pf.classes[Rational(5, 6)] = ur({1}, 1);
  pf.classes[Rational(1, 4)] = ur({1}, 0);
  CHECK(pf.common_denominator() == 12);
  CHECK(PoincareForm{}.common_denominator() == 1);
}
