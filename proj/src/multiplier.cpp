#include "mifilt/multiplier.hpp"

#include <memory>
#include <mutex>
#include <numeric>

#include "mifilt/kernels.hpp"

namespace mifilt {

namespace {

void require_m_primary(const MonomialIdeal& a) {
  if (a.is_unit() || !is_m_primary(a))
    throw PreconditionError("multiplier ideals require an m-primary ideal below the unit ideal");
}

std::vector<Exp> generator_box(const NewtonPolyhedron& p, const Rational& c) {
  // minimal generators satisfy v_i <= ceil(c) * a_i since the ideal
  // contains a^{ceil(c)}
  std::vector<Exp> box(static_cast<size_t>(p.dim));
  Exp cc = to_exp(rat_ceil(c));
  for (int i = 0; i < p.dim; ++i)
    box[static_cast<size_t>(i)] = checked_add(checked_mul(cc, axis_vertex_exponent(p, i)), 1);
  return box;
}

}  // namespace

MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c) {
  require_m_primary(a);
  if (c <= 0) throw PreconditionError("exponent c must be positive");
  NewtonPolyhedron p = newton_polyhedron(a);
  auto member = [&](const ExponentVector& v) {
    std::vector<Rational> u;
    u.reserve(v.e.size());
    for (Exp x : v.e) u.push_back(Rational(x + 1));
    return in_scaled_polyhedron(p, u, c, /*strict=*/true);
  };
  auto gens = kernels::collect_minimal(generator_box(p, c), member);
  return MonomialIdeal::make(a.dim(), std::move(gens), a.characteristic());
}

MonomialIdeal multiplier_left_limit(const MonomialIdeal& a, const Rational& c) {
  require_m_primary(a);
  if (c <= 0) throw PreconditionError("exponent c must be positive");
  NewtonPolyhedron p = newton_polyhedron(a);
  auto member = [&](const ExponentVector& v) {
    std::vector<Rational> u;
    u.reserve(v.e.size());
    for (Exp x : v.e) u.push_back(Rational(x + 1));
    return in_scaled_polyhedron(p, u, c, /*strict=*/false);
  };
  auto gens = kernels::collect_minimal(generator_box(p, c), member);
  return MonomialIdeal::make(a.dim(), std::move(gens), a.characteristic());
}

Rational lct(const MonomialIdeal& a) {
  require_m_primary(a);
  return lct_from_polyhedron(newton_polyhedron(a));
}

namespace {

// Per-monomial exit values over a lazily grown box: exit(v) is the largest c
// with x^v in J(a^c) left-closed, i.e. min over facets of <a, v+1>/b.  The
// ideal at c is {v : exit(v) > c}, its left limit {v : exit(v) >= c}, and
// multiplicities are counts of equal exit values.
struct ExitTable {
  const MonomialIdeal ideal;
  const NewtonPolyhedron poly;
  std::vector<Exp> axis;  // pure-power exponents of the source ideal

  mutable std::mutex lock;
  mutable Exp level = 0;                       // table covers exit values <= level
  mutable std::vector<Exp> box;                // current box bounds
  mutable std::vector<std::pair<Exp, Exp>> exits;  // reduced (num, den) per point

  explicit ExitTable(MonomialIdeal a, NewtonPolyhedron p)
      : ideal(std::move(a)), poly(std::move(p)) {
    for (int i = 0; i < poly.dim; ++i) axis.push_back(axis_vertex_exponent(poly, i));
  }

  void grow(Exp target) const {
    if (target <= level) return;
    std::vector<Exp> nbox(axis.size());
    for (size_t i = 0; i < axis.size(); ++i)
      nbox[i] = checked_add(checked_mul(target, axis[i]), 1);
    const std::int64_t n = kernels::box_size(nbox);
    std::vector<std::pair<Exp, Exp>> nexits(static_cast<size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      ExponentVector v = kernels::unflatten(idx, nbox);
      Exp best_num = 0, best_den = 1;
      bool first = true;
      for (const auto& f : poly.facets) {
        Exp dot = 0;
        for (size_t j = 0; j < nbox.size(); ++j)
          dot = checked_add(dot, checked_mul(f.normal[j], v.e[j] + 1));
        if (first || static_cast<__int128>(dot) * best_den <
                         static_cast<__int128>(best_num) * f.offset) {
          best_num = dot;
          best_den = f.offset;
          first = false;
        }
      }
      Exp g = std::gcd(best_num, best_den);
      nexits[static_cast<size_t>(idx)] = {best_num / g, best_den / g};
    }
    box = std::move(nbox);
    exits = std::move(nexits);
    level = target;
  }

  void ensure(const Rational& c) const { grow(to_exp(rat_ceil(c))); }

  // minimal generators of {v : member} where member is exit > c (right
  // value) or exit >= c (left limit); the complement is finite, so points
  // outside the table box are interior and never minimal
  MonomialIdeal evaluate(const Rational& c, bool closed) const {
    std::scoped_lock guard(lock);
    ensure(c);
    const Exp cn = to_exp(boost::multiprecision::numerator(c));
    const Exp cd = to_exp(boost::multiprecision::denominator(c));
    auto member = [&](std::int64_t idx) {
      const auto& val = exits[static_cast<size_t>(idx)];
      __int128 lhs = static_cast<__int128>(val.first) * cd;
      __int128 rhs = static_cast<__int128>(val.second) * cn;
      return closed ? lhs >= rhs : lhs > rhs;
    };
    const std::int64_t n = kernels::box_size(box);
    std::vector<ExponentVector> gens;
    for (std::int64_t idx = 0; idx < n; ++idx) {
      if (!member(idx)) continue;
      ExponentVector v = kernels::unflatten(idx, box);
      bool minimal = true;
      std::int64_t stride = 1;
      for (size_t i = box.size(); i-- > 0;) {
        if (v.e[i] > 0 && member(idx - stride)) {
          minimal = false;
          break;
        }
        stride *= box[i];
      }
      if (minimal) gens.push_back(std::move(v));
    }
    std::sort(gens.begin(), gens.end());
    return MonomialIdeal::make(ideal.dim(), std::move(gens), ideal.characteristic());
  }
};

}  // namespace

Filtration multiplier_filtration(const MonomialIdeal& a) {
  require_m_primary(a);
  auto table = std::make_shared<ExitTable>(a, newton_polyhedron(a));
  Filtration f;
  f.base = a;
  f.dim = a.dim();
  f.skoda_bound = Rational(a.dim());
  f.eval = [table](const Rational& c) {
    if (c <= 0) throw PreconditionError("exponent c must be positive");
    return table->evaluate(c, /*closed=*/false);
  };
  f.eval_left = [table](const Rational& c) {
    if (c <= 0) throw PreconditionError("exponent c must be positive");
    return table->evaluate(c, /*closed=*/true);
  };
  f.candidates = [table](const Rational& c_max) {
    return candidate_jumps(table->poly, c_max);
  };
  return f;
}

}  // namespace mifilt
