#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mifilt/newton.hpp"
#include "oracles.hpp"

using namespace mifilt;

namespace {

MonomialIdeal ideal2(std::vector<ExponentVector> gens) {
  return MonomialIdeal::make(2, std::move(gens));
}

bool has_facet(const NewtonPolyhedron& p, std::vector<Exp> normal, Exp offset) {
  for (const auto& f : p.facets)
    if (f.normal == normal && f.offset == offset) return true;
  return false;
}

}  // namespace

TEST_CASE("facet enumeration examples") {
  NewtonPolyhedron p = newton_polyhedron(ideal2({{2, 0}, {0, 3}}));
  REQUIRE(p.facets.size() == 1);
  CHECK(has_facet(p, {3, 2}, 6));
  CHECK(p.vertices == std::vector<ExponentVector>{{0, 3}, {2, 0}});
  CHECK(p.facets[0].bounded);

  NewtonPolyhedron q = newton_polyhedron(ideal2({{1, 0}, {0, 1}}));
  REQUIRE(q.facets.size() == 1);
  CHECK(has_facet(q, {1, 1}, 1));

  NewtonPolyhedron r = newton_polyhedron(ideal2({{2, 0}, {1, 1}, {0, 2}}));
  REQUIRE(r.facets.size() == 1);
  CHECK(has_facet(r, {1, 1}, 2));
  CHECK(r.vertices == std::vector<ExponentVector>{{0, 2}, {2, 0}});  // (1,1) is not a vertex
}

TEST_CASE("facets of non-m-primary and higher-dimensional ideals") {
  NewtonPolyhedron p = newton_polyhedron(ideal2({{1, 1}}));
  CHECK(p.facets.size() == 2);  // x >= 1 and y >= 1
  CHECK(has_facet(p, {1, 0}, 1));
  CHECK(has_facet(p, {0, 1}, 1));
  CHECK_FALSE(p.facets[0].bounded);

  NewtonPolyhedron t = newton_polyhedron(MonomialIdeal::make(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  REQUIRE(t.facets.size() == 1);
  CHECK(has_facet(t, {6, 3, 2}, 6));

  CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::zero(2)), PreconditionError);
}

TEST_CASE("axis vertices recover pure powers") {
  NewtonPolyhedron p = newton_polyhedron(ideal2({{2, 0}, {0, 3}}));
  CHECK(axis_vertex_exponent(p, 0) == 2);
  CHECK(axis_vertex_exponent(p, 1) == 3);
  NewtonPolyhedron q = newton_polyhedron(ideal2({{1, 1}}));
  CHECK_THROWS_AS(axis_vertex_exponent(q, 0), PreconditionError);
}

TEST_CASE("scaled membership") {
  NewtonPolyhedron p = newton_polyhedron(ideal2({{1, 0}, {0, 1}}));
  std::vector<Rational> one{1, 1};
  CHECK_FALSE(in_scaled_polyhedron(p, one, 2, true));
  CHECK(in_scaled_polyhedron(p, one, 2, false));
  CHECK(in_scaled_polyhedron(p, {100, 100}, 2, true));

  NewtonPolyhedron q = newton_polyhedron(ideal2({{2, 0}, {0, 3}}));
  CHECK(in_scaled_polyhedron(q, one, Rational(5, 6), false));
  CHECK_FALSE(in_scaled_polyhedron(q, one, Rational(5, 6), true));
  CHECK_THROWS_AS(in_scaled_polyhedron(q, one, 0, false), PreconditionError);
}

TEST_CASE("facet membership agrees with the hull-feasibility oracle") {
  std::mt19937_64 rng(20240501);
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 12; ++trial) {
      MonomialIdeal ideal = oracles::random_m_primary(rng, d, 5, 3);
      NewtonPolyhedron p = newton_polyhedron(ideal);
      std::vector<Exp> box(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i)
        box[static_cast<size_t>(i)] = pure_power_exponent(ideal, i) + 2;
      Exp total = 1;
      for (Exp b : box) total *= b;
      for (Exp idx = 0; idx < total; ++idx) {
        Exp rest = idx;
        std::vector<Rational> u(static_cast<size_t>(d));
        ExponentVector v(std::vector<Exp>(static_cast<size_t>(d), 0));
        for (size_t i = static_cast<size_t>(d); i-- > 0;) {
          v.e[i] = rest % box[i];
          rest /= box[i];
          u[i] = Rational(v.e[i]);
        }
        bool via_facets = in_scaled_polyhedron(p, u, 1, false);
        bool via_hull = oracles::FourierMotzkin::hull_membership(ideal.generators(), u);
        CHECK(via_facets == via_hull);
      }
    }
  }
}

TEST_CASE("scaling monotonicity: closed membership implies smaller interiors") {
  std::mt19937_64 rng(60);
  std::uniform_int_distribution<Exp> num(1, 30), den(1, 6);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + (trial % 2);
    MonomialIdeal ideal = oracles::random_m_primary(rng, d, 5, 2);
    NewtonPolyhedron p = newton_polyhedron(ideal);
    std::vector<Rational> u(static_cast<size_t>(d));
    for (auto& x : u) x = Rational(num(rng), den(rng));
    Rational c(num(rng), den(rng));
    Rational cp = c * Rational(den(rng), den(rng) + 6);  // 0 < cp < c
    if (in_scaled_polyhedron(p, u, c, false)) {
      CHECK(in_scaled_polyhedron(p, u, cp, true));
    }
  }
}

TEST_CASE("integral closure examples and properties") {
  CHECK(integral_closure(ideal2({{2, 0}, {0, 2}})) == ideal2({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(integral_closure(ideal2({{1, 0}, {0, 1}})) == ideal2({{1, 0}, {0, 1}}));
  CHECK(integral_closure(ideal2({{3, 0}, {0, 3}})) ==
        ideal2({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    int d = 2 + (trial % 2);
    MonomialIdeal ideal = oracles::random_m_primary(rng, d, 5, 2);
    MonomialIdeal closure = integral_closure(ideal);
    CHECK(ideal_leq(ideal, closure));
    CHECK(integral_closure(closure) == closure);
  }
}

TEST_CASE("reduction test") {
  CHECK(is_reduction(ideal2({{2, 0}, {0, 2}}), ideal2({{2, 0}, {1, 1}, {0, 2}})));
  CHECK_FALSE(is_reduction(ideal2({{3, 0}, {0, 3}}), ideal2({{3, 0}, {1, 1}, {0, 3}})));
  MonomialIdeal i = ideal2({{2, 0}, {1, 1}, {0, 3}});
  CHECK(is_reduction(i, i));
  CHECK_THROWS_AS(is_reduction(i, MonomialIdeal::make(3, {{1, 1, 1}})), DimensionMismatch);
}

TEST_CASE("candidate jumps examples") {
  NewtonPolyhedron p23 = newton_polyhedron(ideal2({{2, 0}, {0, 3}}));
  CHECK(candidate_jumps(p23, 1) == std::vector<Rational>{Rational(5, 6), Rational(1)});

  NewtonPolyhedron pm = newton_polyhedron(ideal2({{1, 0}, {0, 1}}));
  CHECK(candidate_jumps(pm, 3) == std::vector<Rational>{Rational(2), Rational(3)});
  CHECK(candidate_jumps(pm, Rational(3, 2)).empty());
}
