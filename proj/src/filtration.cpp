#include "mifilt/filtration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace mifilt {

JumpTable jumping_numbers(const Filtration& f, const Rational& c_max) {
  if (c_max <= 0) throw PreconditionError("c_max must be positive");
  JumpTable table;
  table.c_max = c_max;
  std::vector<Rational> cands = f.candidates(c_max);
  if (cands.empty()) return table;

  MonomialIdeal prev_value = f.eval(cands[0] / 2);
  Rational prev_c = 0;
  for (size_t i = 0; i < cands.size(); ++i) {
    const Rational& c = cands[i];
    if (i > 0) {
      MonomialIdeal mid = f.eval((prev_c + c) / 2);
      if (mid != prev_value)
        throw DiagnosticError("filtration is not constant between candidates " +
                              rational_to_string(prev_c) + " and " + rational_to_string(c));
    }
    MonomialIdeal left = f.eval_left(c);
    if (left != prev_value)
      throw DiagnosticError("left limit at " + rational_to_string(c) +
                            " disagrees with the preceding value");
    MonomialIdeal right = f.eval(c);
    if (!ideal_leq(right, left))
      throw DiagnosticError("filtration increases at " + rational_to_string(c));
    if (right != left) {
      Exp m = quotient_length(left, right);
      table.jumps.push_back(Jump{c, right, m});
      table.denominator =
          std::lcm(table.denominator, to_exp(boost::multiprecision::denominator(c)));
    }
    prev_value = right;
    prev_c = c;
  }
  return table;
}

Exp multiplicity(const Filtration& f, const Rational& c) {
  return quotient_length(f.eval_left(c), f.eval(c));
}

namespace {

HPolynomial h_polynomial_of_chain(const Filtration& f, const Rational& c,
                                  const std::function<MonomialIdeal(const Rational&)>& chain) {
  const int d = f.dim;
  MonomialIdeal start = chain(c);
  if (!start.is_unit() && !is_m_primary(start))
    throw PreconditionError("filtration value is not m-primary at " + rational_to_string(c));
  const Exp base_len = colength(start);

  const Exp cap = 10 * (d + to_exp(rat_ceil(f.skoda_bound)));
  std::vector<Exp> lengths;       // lambda(chain(c)/chain(c+j))
  std::vector<BigInt> hcoe;       // coefficients of (1-T)^{d+1} * sum lengths T^j
  MonomialIdeal current = start;

  auto h_coeff = [&](size_t n) {
    BigInt v = 0;
    for (int k = 0; k <= d + 1 && static_cast<size_t>(k) <= n; ++k) {
      BigInt b = binomial(BigInt(d + 1), k);
      if (k % 2) b = -b;
      v += b * lengths[n - static_cast<size_t>(k)];
    }
    return v;
  };

  bool stabilized = false;
  size_t top = 0;
  for (Exp j = 0;; ++j) {
    if (j > cap)
      throw DiagnosticError("Hilbert-Samuel lengths did not stabilize within " +
                            std::to_string(cap) + " steps at c = " + rational_to_string(c));
    if (j > 0) current = chain(c + j);
    lengths.push_back(colength(current) - base_len);
    hcoe.push_back(h_coeff(static_cast<size_t>(j)));

    // stabilization: tail is driven by the base ideal and the last d+2
    // h-coefficients vanish
    if (c + j > f.skoda_bound && static_cast<size_t>(j) >= static_cast<size_t>(d + 2)) {
      MonomialIdeal next = chain(c + j + 1);
      if (next == ideal_product(f.base, current)) {
        bool flat = true;
        for (size_t t = hcoe.size() - static_cast<size_t>(d + 2); t < hcoe.size(); ++t)
          if (hcoe[t] != 0) flat = false;
        if (flat) {
          top = hcoe.size() - static_cast<size_t>(d + 2);
          stabilized = true;
          break;
        }
      }
    }
  }
  if (!stabilized) throw DiagnosticError("unreachable");

  std::vector<BigInt> coeffs(hcoe.begin(), hcoe.begin() + static_cast<long>(top) + 1);
  HPolynomial h{Poly(std::move(coeffs))};

  // cross-check: re-expand h/(1-T)^{d+1} and compare three further lengths
  UniRational hs = UniRational::of(h.h, d + 1);
  Exp j0 = static_cast<Exp>(lengths.size() - 1);
  TruncatedSeries exp_series = expand(hs, Rational(j0 + 3));
  for (Exp j = j0 + 1; j <= j0 + 3; ++j) {
    Exp direct = colength(chain(c + j)) - base_len;
    BigInt predicted = 0;
    if (auto it = exp_series.terms.find(Rational(j)); it != exp_series.terms.end())
      predicted = it->second;
    if (predicted != direct)
      throw DiagnosticError("h-polynomial re-expansion mismatch at index " + std::to_string(j));
  }
  return h;
}

}  // namespace

HPolynomial h_polynomial(const Filtration& f, const Rational& c) {
  return h_polynomial_of_chain(f, c, f.eval);
}

HPolynomial h_polynomial_left(const Filtration& f, const Rational& c) {
  return h_polynomial_of_chain(f, c, f.eval_left);
}

UniRational tail_series(const Filtration& f, const Rational& c) {
  Exp m = multiplicity(f, c);
  HPolynomial hc = h_polynomial(f, c);
  HPolynomial hl = h_polynomial_left(f, c);
  UniRational a = UniRational::of(Poly::constant(m), 1);
  UniRational b = UniRational::of(hc.h - hl.h, f.dim + 1);
  return a + b;
}

PoincareForm poincare_closed_form(const Filtration& f) {
  JumpTable witness = jumping_numbers(f, Rational(f.dim + 1));
  std::set<Rational> classes;
  for (const auto& jump : witness.jumps) classes.insert(frac_in_unit(jump.c));
  PoincareForm form;
  for (const Rational& c : classes) {
    UniRational r = tail_series(f, c);
    if (!r.is_zero()) form.classes[c] = std::move(r);
  }
  return form;
}

TruncatedSeries poincare_bruteforce(const Filtration& f, const Rational& order) {
  TruncatedSeries s;
  s.order = order;
  JumpTable table = jumping_numbers(f, order);
  for (const auto& jump : table.jumps) s.terms[jump.c] = jump.multiplicity;
  return s;
}

namespace {

struct TableData {
  MonomialIdeal base;
  std::vector<std::pair<Rational, MonomialIdeal>> entries;
  Rational bound;
  mutable std::map<Rational, MonomialIdeal> memo;
  mutable std::mutex lock;

  // breakpoints: entry points shifted by nonnegative integers
  std::vector<Rational> breakpoints_upto(const Rational& c_max) const {
    std::set<Rational> pts;
    for (const auto& [c, ideal] : entries)
      for (Rational t = c; t <= c_max; t += 1) pts.insert(t);
    return {pts.begin(), pts.end()};
  }

  // value at breakpoint t (or table lookup for t <= bound)
  MonomialIdeal value_at(const Rational& t) const {
    if (t <= bound) {
      MonomialIdeal v = MonomialIdeal::unit(base.dim(), base.characteristic());
      for (const auto& [c, ideal] : entries) {
        if (c <= t) v = ideal;
      }
      return v;
    }
    {
      std::scoped_lock guard(lock);
      if (auto it = memo.find(t); it != memo.end()) return it->second;
    }
    MonomialIdeal v = ideal_product(base, eval_at(t - 1));
    std::scoped_lock guard(lock);
    memo.emplace(t, v);
    return v;
  }

  // right-continuous step evaluation: value at the largest breakpoint <= t
  MonomialIdeal eval_at(const Rational& t) const {
    if (t <= bound) return value_at(t);
    Rational best = 0;
    bool found = false;
    for (const auto& [c, ideal] : entries) {
      if (c > t) continue;
      // largest c + k <= t
      Rational shifted = c + Rational(rat_floor(t - c));
      if (!found || shifted > best) best = shifted;
      found = true;
    }
    if (!found) return MonomialIdeal::unit(base.dim(), base.characteristic());
    return value_at(best);
  }

  MonomialIdeal eval_left_at(const Rational& t) const {
    Rational prev = 0;
    bool found = false;
    for (const auto& [c, ideal] : entries) {
      Rational shifted = c;
      while (shifted < t) {
        if (!found || shifted > prev) {
          prev = shifted;
          found = true;
        }
        shifted += 1;
      }
    }
    if (!found) return MonomialIdeal::unit(base.dim(), base.characteristic());
    return value_at(prev);
  }
};

}  // namespace

Filtration make_table_filtration(const MonomialIdeal& base,
                                 std::vector<std::pair<Rational, MonomialIdeal>> entries,
                                 const Rational& skoda_bound) {
  if (!is_m_primary(base) || base.is_unit())
    throw PreconditionError("table filtration requires an m-primary base ideal");
  if (skoda_bound <= 0) throw PreconditionError("skoda bound must be positive");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MonomialIdeal prev = MonomialIdeal::unit(base.dim(), base.characteristic());
  for (const auto& [c, ideal] : entries) {
    if (c <= 0 || c > skoda_bound)
      throw PreconditionError("table entries must have 0 < c <= skoda bound");
    if (ideal.dim() != base.dim()) throw DimensionMismatch();
    if (ideal.is_unit() || !is_m_primary(ideal))
      throw PreconditionError("table entries must be m-primary ideals below the unit ideal");
    if (!(ideal_leq(ideal, prev) && ideal != prev))
      throw PreconditionError("table entries must be strictly decreasing");
    prev = ideal;
  }

  auto data = std::make_shared<TableData>();
  data->base = base;
  data->entries = std::move(entries);
  data->bound = skoda_bound;

  // seam check: the step function must keep decreasing across the first
  // tail interval (B, B+1]
  for (const Rational& t : data->breakpoints_upto(skoda_bound + 1)) {
    if (t <= skoda_bound || t > skoda_bound + 1) continue;
    MonomialIdeal left = data->eval_left_at(t);
    MonomialIdeal right = data->eval_at(t);
    if (!ideal_leq(right, left))
      throw PreconditionError("tail rule violates monotonicity at breakpoint " +
                              rational_to_string(t));
  }

  Filtration f;
  f.base = base;
  f.dim = base.dim();
  f.skoda_bound = skoda_bound;
  f.eval = [data](const Rational& c) { return data->eval_at(c); };
  f.eval_left = [data](const Rational& c) { return data->eval_left_at(c); };
  f.candidates = [data](const Rational& c_max) { return data->breakpoints_upto(c_max); };
  return f;
}

}  // namespace mifilt
