#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <random>
#include <vector>

#include "mifilt/monomial.hpp"
#include "mifilt/rational.hpp"

namespace mifilt::oracles {

/// Straight lattice-box count of standard monomials: the reference for every
/// colength computation.
inline Exp colength_bruteforce(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  const int d = ideal.dim();
  std::vector<Exp> box(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) box[static_cast<size_t>(i)] = pure_power_exponent(ideal, i);
  Exp total = 1;
  for (Exp b : box) total *= b;
  Exp count = 0;
  for (Exp idx = 0; idx < total; ++idx) {
    Exp rest = idx;
    ExponentVector v(std::vector<Exp>(static_cast<size_t>(d), 0));
    for (size_t i = static_cast<size_t>(d); i-- > 0;) {
      v.e[i] = rest % box[i];
      rest /= box[i];
    }
    if (!contains_monomial(ideal, v)) ++count;
  }
  return count;
}

/// Exact feasibility of u in conv(points) + R_{>=0}^d by Fourier-Motzkin
/// elimination over the rationals.  Shares no code with the facet pipeline.
///
/// System in variables (lambda_1..lambda_m): lambda >= 0, sum lambda = 1,
/// sum lambda_k p_k <= u  (slack absorbed by the recession orthant).
class FourierMotzkin {
 public:
  // rows are (a_1..a_n | rhs) meaning sum a_i x_i <= rhs
  static bool feasible(std::vector<std::vector<Rational>> rows, int nvars) {
    for (int v = nvars; v-- > 0;) {
      std::vector<std::vector<Rational>> pos, neg, rest;
      for (auto& r : rows) {
        if (r[static_cast<size_t>(v)] > 0)
          pos.push_back(r);
        else if (r[static_cast<size_t>(v)] < 0)
          neg.push_back(r);
        else
          rest.push_back(r);
      }
      for (const auto& p : pos)
        for (const auto& n : neg) {
          // eliminate x_v between p (upper bound) and n (lower bound)
          Rational cp = p[static_cast<size_t>(v)], cn = -n[static_cast<size_t>(v)];
          std::vector<Rational> row(p.size());
          for (size_t j = 0; j < p.size(); ++j) row[j] = p[j] * cn + n[j] * cp;
          rest.push_back(std::move(row));
        }
      rows = std::move(rest);
    }
    for (const auto& r : rows)
      if (r.back() < 0) return false;
    return true;
  }

  static bool hull_membership(const std::vector<ExponentVector>& points,
                              const std::vector<Rational>& u) {
    const int m = static_cast<int>(points.size());
    const int d = static_cast<int>(u.size());
    std::vector<std::vector<Rational>> rows;
    // -lambda_k <= 0
    for (int k = 0; k < m; ++k) {
      std::vector<Rational> r(static_cast<size_t>(m) + 1, Rational(0));
      r[static_cast<size_t>(k)] = -1;
      rows.push_back(std::move(r));
    }
    // sum lambda = 1 as two inequalities
    {
      std::vector<Rational> r1(static_cast<size_t>(m) + 1, Rational(1));
      r1.back() = 1;
      std::vector<Rational> r2(static_cast<size_t>(m) + 1, Rational(-1));
      r2.back() = -1;
      rows.push_back(std::move(r1));
      rows.push_back(std::move(r2));
    }
    // sum lambda_k p_k[i] <= u[i]
    for (int i = 0; i < d; ++i) {
      std::vector<Rational> r(static_cast<size_t>(m) + 1, Rational(0));
      for (int k = 0; k < m; ++k)
        r[static_cast<size_t>(k)] = Rational(points[static_cast<size_t>(k)][i]);
      r.back() = u[static_cast<size_t>(i)];
      rows.push_back(std::move(r));
    }
    return feasible(std::move(rows), m);
  }
};

/// Deterministic random m-primary ideals for property tests.
inline MonomialIdeal random_m_primary(std::mt19937_64& rng, int d, Exp max_exp,
                                      int extra_gens) {
  std::vector<ExponentVector> gens;
  std::uniform_int_distribution<Exp> exp_dist(1, max_exp);
  for (int i = 0; i < d; ++i) {
    ExponentVector v(std::vector<Exp>(static_cast<size_t>(d), 0));
    v.e[static_cast<size_t>(i)] = exp_dist(rng);
    gens.push_back(std::move(v));
  }
  std::uniform_int_distribution<Exp> entry_dist(0, max_exp);
  for (int k = 0; k < extra_gens; ++k) {
    ExponentVector v(std::vector<Exp>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i) v.e[static_cast<size_t>(i)] = entry_dist(rng);
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(d, std::move(gens));
}

}  // namespace mifilt::oracles
