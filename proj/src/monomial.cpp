#include "mifilt/monomial.hpp"

#include <algorithm>
#include <map>

#include "mifilt/kernels.hpp"

namespace mifilt {

std::vector<ExponentVector> minimal_vectors(std::vector<ExponentVector> vs) {
  if (vs.empty()) return vs;
  const size_t d = vs[0].e.size();
  for (const auto& v : vs)
    if (v.e.size() != d) throw DimensionMismatch();

  if (d == 2) {
    // staircase sweep: sort lex, keep strictly decreasing second coordinate
    std::sort(vs.begin(), vs.end());
    std::vector<ExponentVector> out;
    for (auto& v : vs) {
      if (!out.empty() && out.back().e[1] <= v.e[1]) continue;  // dominated
      out.push_back(std::move(v));
    }
    return out;
  }

  // general d: scan by ascending total degree; a dominator always has a
  // strictly smaller degree (or is an equal duplicate)
  std::sort(vs.begin(), vs.end(), [](const ExponentVector& a, const ExponentVector& b) {
    Exp da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a < b;
  });
  std::vector<ExponentVector> out;
  for (auto& v : vs) {
    bool dominated = false;
    for (const auto& m : out) {
      if (m.divides(v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal MonomialIdeal::make(int dim, std::vector<ExponentVector> gens,
                                  Exp characteristic) {
  if (dim < 1) throw PreconditionError("ambient dimension must be >= 1");
  for (const auto& g : gens)
    if (g.dim() != dim) throw DimensionMismatch();
  MonomialIdeal ideal;
  ideal.dim_ = dim;
  ideal.characteristic_ = characteristic;
  ideal.gens_ = minimal_vectors(std::move(gens));
  return ideal;
}

namespace {

void check_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch();
}

}  // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::make(a.dim(), std::move(gens), a.characteristic());
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(u + v);
  return MonomialIdeal::make(a.dim(), std::move(gens), a.characteristic());
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(cwise_max(u, v));
  return MonomialIdeal::make(a.dim(), std::move(gens), a.characteristic());
}

MonomialIdeal ideal_power(const MonomialIdeal& a, Exp n) {
  if (n < 0) throw PreconditionError("ideal power requires a nonnegative exponent");
  if (n == 0) return MonomialIdeal::unit(a.dim(), a.characteristic());
  if (a.is_zero()) return a;
  // repeated squaring; intermediate results are kept minimal
  MonomialIdeal result = MonomialIdeal::unit(a.dim(), a.characteristic());
  MonomialIdeal base = a;
  Exp k = n;
  while (k > 0) {
    if (k & 1) result = ideal_product(result, base);
    k >>= 1;
    if (k > 0) base = ideal_product(base, base);
    if (result.generators().size() > 4'000'000)
      throw ResourceError("ideal power too large to materialize");
  }
  return result;
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& v) {
  if (v.dim() != ideal.dim()) throw DimensionMismatch();
  for (const auto& g : ideal.generators())
    if (g.divides(v)) return true;
  return false;
}

bool ideal_leq(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  check_same_dim(inner, outer);
  for (const auto& g : inner.generators())
    if (!contains_monomial(outer, g)) return false;
  return true;
}

bool is_m_primary(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return true;
  const int d = ideal.dim();
  for (int i = 0; i < d; ++i) {
    bool found = false;
    for (const auto& g : ideal.generators()) {
      bool pure = g[i] > 0;
      for (int j = 0; pure && j < d; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Exp pure_power_exponent(const MonomialIdeal& ideal, int var) {
  if (ideal.is_unit()) return 0;
  for (const auto& g : ideal.generators()) {
    if (g[var] == 0) continue;
    bool pure = true;
    for (int j = 0; pure && j < ideal.dim(); ++j)
      if (j != var && g[j] != 0) pure = false;
    if (pure) return g[var];
  }
  throw PreconditionError("ideal has no pure power of variable " + std::to_string(var + 1));
}

namespace {

// standard-monomial count by slicing off the last axis; 2D base case walks
// the staircase
Exp colength_rec(const std::vector<ExponentVector>& gens, int d) {
  if (d == 1) {
    Exp b = gens.empty() ? -1 : gens[0][0];  // canonical 1D ideal has one generator
    for (const auto& g : gens) b = std::min(b, g[0]);
    return b;
  }
  if (d == 2) {
    // gens sorted lex: first coords ascending, second strictly descending,
    // starting at (0, b_y) and ending at (b_x, 0)
    Exp area = 0;
    for (size_t i = 0; i + 1 < gens.size(); ++i)
      area = checked_add(area, checked_mul(gens[i + 1][0] - gens[i][0], gens[i][1]));
    return area;
  }
  Exp b_last = 0;
  for (const auto& g : gens) {
    bool pure = g[d - 1] > 0;
    for (int j = 0; pure && j < d - 1; ++j)
      if (g[j] != 0) pure = false;
    if (pure) b_last = g[d - 1];
  }
  Exp total = 0;
  Exp k = 0;
  while (k < b_last) {
    // slice at x_d = k: generators with last exponent <= k, projected
    std::vector<ExponentVector> slice;
    Exp next = b_last;
    for (const auto& g : gens) {
      if (g[d - 1] <= k)
        slice.push_back(ExponentVector(std::vector<Exp>(g.e.begin(), g.e.end() - 1)));
      else
        next = std::min(next, g[d - 1]);
    }
    slice = minimal_vectors(std::move(slice));
    Exp width = next - k;
    total = checked_add(total, checked_mul(width, colength_rec(slice, d - 1)));
    k = next;
  }
  return total;
}

}  // namespace

Exp colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  if (!is_m_primary(ideal))
    throw PreconditionError("colength is infinite: ideal is not m-primary");
  return colength_rec(ideal.generators(), ideal.dim());
}

Exp quotient_length(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  check_same_dim(outer, inner);
  if (!ideal_leq(inner, outer))
    throw PreconditionError("quotient_length requires inner subseteq outer");
  return colength(inner) - colength(outer);
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, const BigInt& q) {
  if (q < 1) throw PreconditionError("frobenius power requires q >= 1");
  const Exp qe = to_exp(q);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    ExponentVector v = g;
    for (auto& x : v.e) x = checked_mul(x, qe);
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(ideal.dim(), std::move(gens), ideal.characteristic());
}

MonomialIdeal frobenius_root(const MonomialIdeal& ideal, const BigInt& q) {
  if (q < 1) throw PreconditionError("frobenius root requires q >= 1");
  const Exp qe = to_exp(q);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    ExponentVector v = g;
    for (auto& x : v.e) x /= qe;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(ideal.dim(), std::move(gens), ideal.characteristic());
}

std::string to_string(const ExponentVector& v, int dim) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s;
  for (int i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += (dim <= 4) ? names[i] : ("x" + std::to_string(i + 1));
    if (v[i] > 1) s += "^" + std::to_string(v[i]);
  }
  if (s.empty()) s = "1";
  return s;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  if (ideal.is_unit()) return "(1)";
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += to_string(g, ideal.dim());
  }
  return s;
}

}  // namespace mifilt
