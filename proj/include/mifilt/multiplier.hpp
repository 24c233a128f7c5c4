#pragma once

#include "mifilt/filtration.hpp"
#include "mifilt/newton.hpp"

namespace mifilt {

/// J(a^c): monomials x^v with v+1 in the interior of c*P(a).
MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c);

/// Left limit J(a^{c-eps}): closed membership v+1 in c*P(a), exact by the
/// scaling monotonicity of m-primary Newton polyhedra.
MonomialIdeal multiplier_left_limit(const MonomialIdeal& a, const Rational& c);

/// Log canonical threshold: min over facets of <a, 1>/b.
Rational lct(const MonomialIdeal& a);

/// The multiplier filtration as an engine object (skoda_bound = dim,
/// candidates from the Newton polyhedron).  Evaluations share a lazily grown
/// table of per-monomial exit values, so repeated queries stay cheap.
Filtration multiplier_filtration(const MonomialIdeal& a);

}  // namespace mifilt
