#pragma once

#include <vector>

#include "mifilt/monomial.hpp"
#include "mifilt/rational.hpp"

namespace mifilt {

/// Supporting inequality <normal, x> >= offset of the Newton polyhedron,
/// with primitive nonnegative integer normal and positive offset.  The
/// coordinate facets x_i >= 0 are implicit.  A facet is bounded (compact)
/// exactly when every normal entry is positive.
struct Facet {
  std::vector<Exp> normal;
  Exp offset = 0;
  bool bounded = false;
};

/// P(I) = conv(generator exponents) + R_{>=0}^d, stored as vertices plus
/// the non-coordinate facet inequalities, all exact.
struct NewtonPolyhedron {
  int dim = 0;
  std::vector<ExponentVector> vertices;
  std::vector<Facet> facets;
};

/// Exact facet/vertex enumeration for a nonzero monomial ideal.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// u in c*P (strict = interior membership; coordinate facets participate in
/// the strict test only through u_i > 0, which suffices because the stored
/// facets all have positive offset).
bool in_scaled_polyhedron(const NewtonPolyhedron& p, const std::vector<Rational>& u,
                          const Rational& c, bool strict);

/// max { t >= 0 : u in t*P }, i.e. min over facets of <a,u>/b.
Rational scaling_order(const NewtonPolyhedron& p, const std::vector<Rational>& u);
Rational scaling_order(const NewtonPolyhedron& p, const ExponentVector& u);

/// Exponent of the unique vertex on coordinate axis i (the pure-power
/// exponent of the source ideal); throws for non-m-primary sources.
Exp axis_vertex_exponent(const NewtonPolyhedron& p, int var);

/// min over facets of <a, 1>/b: the first jumping number of the multiplier
/// filtration.
Rational lct_from_polyhedron(const NewtonPolyhedron& p);

/// Lattice points of P(I), minimalized.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// Q subseteq I and I inside the integral closure of Q.
bool is_reduction(const MonomialIdeal& q, const MonomialIdeal& ideal);

/// All values <a, v+1>/b <= c_max over facets and lattice v, together with
/// ceil(lct) when it is <= c_max; a sorted superset of the jumping numbers
/// in (0, c_max].
std::vector<Rational> candidate_jumps(const NewtonPolyhedron& p, const Rational& c_max);

}  // namespace mifilt
