#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "mifilt/monomial.hpp"
#include "mifilt/series.hpp"

namespace mifilt {

struct DiagnosticError : std::runtime_error {
  explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

/// A Q-good filtration of m-primary ideals presented as evaluators.  eval(c)
/// is the ideal at c (right-continuous), eval_left(c) the left limit; both
/// must be pure and constant between consecutive candidates.  Above
/// skoda_bound the filtration satisfies eval(c) = base * eval(c-1).
struct Filtration {
  MonomialIdeal base;
  int dim = 0;
  Rational skoda_bound;
  std::function<MonomialIdeal(const Rational&)> eval;
  std::function<MonomialIdeal(const Rational&)> eval_left;
  /// sorted superset of the jumping numbers in (0, c_max]
  std::function<std::vector<Rational>(const Rational&)> candidates;
};

struct Jump {
  Rational c;
  MonomialIdeal ideal;
  Exp multiplicity = 0;
  bool operator==(const Jump&) const = default;
};

struct JumpTable {
  std::vector<Jump> jumps;
  Rational c_max;
  Exp denominator = 1;  // lcm of jump denominators
};

/// Integer h-polynomial of a Hilbert-Samuel series h(T)/(1-T)^{d+1}.
struct HPolynomial {
  Poly h;
  int degree() const { return h.degree(); }
  bool operator==(const HPolynomial&) const = default;
};

/// Evaluates F at every candidate <= c_max and at midpoints between
/// consecutive candidates; records jumps where the left limit strictly
/// exceeds the value, with multiplicity the quotient length.  Piecewise
/// constancy between candidates is verified and a violation is a
/// DiagnosticError.
JumpTable jumping_numbers(const Filtration& f, const Rational& c_max);

/// quotient_length(eval_left(c), eval(c)); zero iff c is not a jump.
Exp multiplicity(const Filtration& f, const Rational& c);

/// h-polynomial of the good filtration {eval(c + j)}_j, computed from the
/// length sequence until both the Skoda tail and the (d+1)-st finite
/// differences certify stabilization, then cross-checked by re-expansion.
HPolynomial h_polynomial(const Filtration& f, const Rational& c);
/// Same for the left-limit chain {eval_left(c + j)}_j.
HPolynomial h_polynomial_left(const Filtration& f, const Rational& c);

/// m(c)/(1-T) + (h_c(T) - h_{c-eps}(T))/(1-T)^{d+1}; expands to
/// sum_j m(c+j) T^j.
UniRational tail_series(const Filtration& f, const Rational& c);

/// Exact Poincare series: classes are the residues in (0,1] of jumps
/// <= dim+1 (every class with a jump anywhere is witnessed there), each
/// contributing tail_series at the class representative.
PoincareForm poincare_closed_form(const Filtration& f);

/// Direct enumeration of sum m(c) T^c over jumps <= order.
TruncatedSeries poincare_bruteforce(const Filtration& f, const Rational& order);

/// Synthetic filtration from an explicit table of values on (0, B] plus the
/// tail rule eval(t) = base * eval(t-1) applied at breakpoints beyond B.
/// Rejects non-decreasing tables and seam violations.
Filtration make_table_filtration(const MonomialIdeal& base,
                                 std::vector<std::pair<Rational, MonomialIdeal>> entries,
                                 const Rational& skoda_bound);

}  // namespace mifilt
