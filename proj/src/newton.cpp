#include "mifilt/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mifilt/kernels.hpp"

namespace mifilt {

namespace {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// row echelon rank, destructive
int rank_of(RatMat m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// one-dimensional kernel of a (d-1)-rank matrix with d columns; empty if the
// kernel is not a line
RatVec kernel_line(RatMat m, int d) {
  const size_t cols = static_cast<size_t>(d);
  size_t r = 0;
  std::vector<int> pivot_col;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (static_cast<int>(r) != d - 1) return {};
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  int free_col = -1;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_col = static_cast<int>(c);
  RatVec v(cols, Rational(0));
  v[static_cast<size_t>(free_col)] = 1;
  for (size_t i = 0; i < r; ++i) {
    size_t pc = static_cast<size_t>(pivot_col[i]);
    v[pc] = -m[i][static_cast<size_t>(free_col)] / m[i][pc];
  }
  return v;
}

std::vector<Exp> to_primitive(const RatVec& v) {
  BigInt den = 1;
  for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<BigInt> w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
  BigInt g = 0;
  for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
  std::vector<Exp> out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(to_exp(g == 0 ? x : BigInt(x / g)));
  return out;
}

Exp dot(const std::vector<Exp>& a, const ExponentVector& v) {
  Exp s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], v.e[i]));
  return s;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw PreconditionError("Newton polyhedron of the zero ideal is undefined");
  const int d = ideal.dim();
  const auto& gens = ideal.generators();
  NewtonPolyhedron p;
  p.dim = d;

  if (d == 1) {
    Exp b = gens[0][0];
    if (b > 0) p.facets.push_back(Facet{{1}, b, true});
    p.vertices.push_back(gens[0]);
    return p;
  }

  const int g = static_cast<int>(gens.size());
  std::set<std::pair<std::vector<Exp>, Exp>> seen;

  // every facet hyperplane is spanned by a set S of generators and a set D
  // of recession directions with |S| + |D| = d
  std::vector<int> gen_subset, dir_subset;
  std::vector<int> gen_idx(static_cast<size_t>(g));
  std::iota(gen_idx.begin(), gen_idx.end(), 0);

  // iterate over subset sizes; subsets enumerated by combinations
  for (int ns = 1; ns <= std::min(d, g); ++ns) {
    int nd = d - ns;
    std::vector<int> sc(static_cast<size_t>(ns));
    std::iota(sc.begin(), sc.end(), 0);
    while (true) {
      // direction subsets of size nd out of d
      std::vector<int> dc(static_cast<size_t>(nd));
      std::iota(dc.begin(), dc.end(), 0);
      bool more_dirs = true;
      while (more_dirs) {
        RatMat rows;
        for (int i = 1; i < ns; ++i) {
          RatVec row(static_cast<size_t>(d));
          for (int j = 0; j < d; ++j)
            row[static_cast<size_t>(j)] =
                Rational(gens[static_cast<size_t>(sc[static_cast<size_t>(i)])][j] -
                         gens[static_cast<size_t>(sc[0])][j]);
          rows.push_back(std::move(row));
        }
        for (int i = 0; i < nd; ++i) {
          RatVec row(static_cast<size_t>(d), Rational(0));
          row[static_cast<size_t>(dc[static_cast<size_t>(i)])] = 1;
          rows.push_back(std::move(row));
        }
        RatVec normal_q = kernel_line(rows, d);
        if (!normal_q.empty()) {
          std::vector<Exp> a = to_primitive(normal_q);
          bool nonneg = true, nonpos = true;
          for (Exp x : a) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
          }
          if (nonpos)
            for (auto& x : a) x = -x;
          if (nonneg || nonpos) {
            Exp b = dot(a, gens[static_cast<size_t>(sc[0])]);
            if (b > 0) {
              bool valid = true;
              for (const auto& gv : gens)
                if (dot(a, gv) < b) {
                  valid = false;
                  break;
                }
              if (valid && !seen.count({a, b})) {
                // facet test: tight generators plus tight directions must
                // span an affine space of dimension d-1
                RatMat span;
                const ExponentVector* first_tight = nullptr;
                for (const auto& gv : gens) {
                  if (dot(a, gv) != b) continue;
                  if (!first_tight) {
                    first_tight = &gv;
                    continue;
                  }
                  RatVec row(static_cast<size_t>(d));
                  for (int j = 0; j < d; ++j)
                    row[static_cast<size_t>(j)] = Rational(gv[j] - (*first_tight)[j]);
                  span.push_back(std::move(row));
                }
                for (int j = 0; j < d; ++j) {
                  if (a[static_cast<size_t>(j)] != 0) continue;
                  RatVec row(static_cast<size_t>(d), Rational(0));
                  row[static_cast<size_t>(j)] = 1;
                  span.push_back(std::move(row));
                }
                if (rank_of(std::move(span)) == d - 1) {
                  seen.insert({a, b});
                  bool bounded = true;
                  for (Exp x : a)
                    if (x == 0) bounded = false;
                  p.facets.push_back(Facet{std::move(a), b, bounded});
                }
              }
            }
          }
        }
        // advance direction combination
        int i = nd - 1;
        while (i >= 0 && dc[static_cast<size_t>(i)] == i + d - nd) --i;
        if (i < 0)
          more_dirs = false;
        else {
          ++dc[static_cast<size_t>(i)];
          for (int j = i + 1; j < nd; ++j)
            dc[static_cast<size_t>(j)] = dc[static_cast<size_t>(j - 1)] + 1;
        }
        if (nd == 0) more_dirs = false;
      }
      // advance generator combination
      int i = ns - 1;
      while (i >= 0 && sc[static_cast<size_t>(i)] == i + g - ns) --i;
      if (i < 0) break;
      ++sc[static_cast<size_t>(i)];
      for (int j = i + 1; j < ns; ++j)
        sc[static_cast<size_t>(j)] = sc[static_cast<size_t>(j - 1)] + 1;
    }
  }

  std::sort(p.facets.begin(), p.facets.end(), [](const Facet& x, const Facet& y) {
    return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
  });

  // vertices: generators lying on d linearly independent tight hyperplanes
  // (facets plus coordinate planes)
  for (const auto& gv : gens) {
    RatMat tight;
    for (const auto& f : p.facets) {
      if (dot(f.normal, gv) != f.offset) continue;
      RatVec row(static_cast<size_t>(d));
      for (int j = 0; j < d; ++j) row[static_cast<size_t>(j)] = Rational(f.normal[static_cast<size_t>(j)]);
      tight.push_back(std::move(row));
    }
    for (int j = 0; j < d; ++j) {
      if (gv[j] != 0) continue;
      RatVec row(static_cast<size_t>(d), Rational(0));
      row[static_cast<size_t>(j)] = 1;
      tight.push_back(std::move(row));
    }
    if (rank_of(std::move(tight)) == d) p.vertices.push_back(gv);
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

bool in_scaled_polyhedron(const NewtonPolyhedron& p, const std::vector<Rational>& u,
                          const Rational& c, bool strict) {
  if (c <= 0) throw PreconditionError("scaling factor must be positive");
  if (static_cast<int>(u.size()) != p.dim) throw DimensionMismatch();
  for (const auto& x : u)
    if (x < 0) throw PreconditionError("membership point must be nonnegative");
  if (strict)
    for (const auto& x : u)
      if (x == 0) return false;
  for (const auto& f : p.facets) {
    Rational lhs = 0;
    for (int j = 0; j < p.dim; ++j)
      lhs += Rational(f.normal[static_cast<size_t>(j)]) * u[static_cast<size_t>(j)];
    Rational rhs = c * Rational(f.offset);
    if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
  }
  return true;
}

Rational scaling_order(const NewtonPolyhedron& p, const std::vector<Rational>& u) {
  bool first = true;
  Rational best = 0;
  for (const auto& f : p.facets) {
    Rational lhs = 0;
    for (int j = 0; j < p.dim; ++j)
      lhs += Rational(f.normal[static_cast<size_t>(j)]) * u[static_cast<size_t>(j)];
    Rational v = lhs / Rational(f.offset);
    if (first || v < best) best = v;
    first = false;
  }
  if (first) throw PreconditionError("polyhedron has no facets");
  return best;
}

Rational scaling_order(const NewtonPolyhedron& p, const ExponentVector& u) {
  std::vector<Rational> uq;
  uq.reserve(u.e.size());
  for (Exp x : u.e) uq.push_back(Rational(x));
  return scaling_order(p, uq);
}

Exp axis_vertex_exponent(const NewtonPolyhedron& p, int var) {
  for (const auto& v : p.vertices) {
    if (v[var] == 0) continue;
    bool pure = true;
    for (int j = 0; pure && j < p.dim; ++j)
      if (j != var && v[j] != 0) pure = false;
    if (pure) return v[var];
  }
  throw PreconditionError("polyhedron has no vertex on axis " + std::to_string(var + 1) +
                          " (source ideal not m-primary)");
}

Rational lct_from_polyhedron(const NewtonPolyhedron& p) {
  std::vector<Rational> ones(static_cast<size_t>(p.dim), Rational(1));
  return scaling_order(p, ones);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw PreconditionError("integral closure of the zero ideal is undefined");
  if (ideal.is_unit()) return ideal;
  NewtonPolyhedron p = newton_polyhedron(ideal);
  std::vector<Exp> box(static_cast<size_t>(p.dim), 0);
  for (const auto& v : p.vertices)
    for (int j = 0; j < p.dim; ++j)
      box[static_cast<size_t>(j)] = std::max(box[static_cast<size_t>(j)], v[j] + 1);
  auto member = [&](const ExponentVector& v) {
    for (const auto& f : p.facets)
      if (dot(f.normal, v) < f.offset) return false;
    return true;
  };
  auto gens = kernels::collect_minimal(box, member);
  return MonomialIdeal::make(ideal.dim(), std::move(gens), ideal.characteristic());
}

bool is_reduction(const MonomialIdeal& q, const MonomialIdeal& ideal) {
  if (q.dim() != ideal.dim()) throw DimensionMismatch();
  if (q.is_zero() || ideal.is_zero())
    throw PreconditionError("reduction test requires nonzero ideals");
  if (!ideal_leq(q, ideal)) return false;
  NewtonPolyhedron p = newton_polyhedron(q);
  for (const auto& gv : ideal.generators()) {
    for (const auto& f : p.facets)
      if (dot(f.normal, gv) < f.offset) return false;
  }
  return true;
}

std::vector<Rational> candidate_jumps(const NewtonPolyhedron& p, const Rational& c_max) {
  if (c_max <= 0) throw PreconditionError("candidate bound must be positive");
  std::vector<Exp> box(static_cast<size_t>(p.dim));
  for (int i = 0; i < p.dim; ++i) {
    Exp a = axis_vertex_exponent(p, i);
    box[static_cast<size_t>(i)] = to_exp(rat_ceil(c_max * Rational(a)));
  }
  std::set<Rational> values;
  const std::int64_t n = kernels::box_size(box);
  for (std::int64_t idx = 0; idx < n; ++idx) {
    ExponentVector v = kernels::unflatten(idx, box);
    for (auto& x : v.e) ++x;
    for (const auto& f : p.facets) {
      Rational val(dot(f.normal, v), f.offset);
      if (val <= c_max) values.insert(val);
    }
  }
  Rational first_integer(rat_ceil(lct_from_polyhedron(p)));
  if (first_integer <= c_max) values.insert(first_integer);
  return std::vector<Rational>(values.begin(), values.end());
}

}  // namespace mifilt
