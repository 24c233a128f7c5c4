#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mifilt/rational.hpp"

namespace mifilt {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("exponent vectors of mixed dimension") {}
};

struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vector of a monomial x^v in d variables.
struct ExponentVector {
  std::vector<Exp> e;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<Exp> v) : e(std::move(v)) {}
  ExponentVector(std::initializer_list<Exp> v) : e(v) {}

  int dim() const { return static_cast<int>(e.size()); }
  Exp operator[](int i) const { return e[static_cast<size_t>(i)]; }
  Exp& operator[](int i) { return e[static_cast<size_t>(i)]; }

  bool divides(const ExponentVector& v) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > v.e[i]) return false;
    return true;
  }

  Exp total_degree() const {
    Exp s = 0;
    for (Exp x : e) s = checked_add(s, x);
    return s;
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = checked_add(r.e[i], b.e[i]);
    return r;
  }

  friend ExponentVector cwise_max(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
  }

  auto operator<=>(const ExponentVector&) const = default;
};

/// A monomial ideal in K[x_1..x_d], stored as the minimal generator set in
/// lexicographic order (canonical form).  The zero ideal has no generators;
/// the unit ideal is generated by (0,...,0).  The characteristic tag is
/// metadata only and does not take part in equality.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Canonicalizing constructor: removes divisible generators and sorts.
  static MonomialIdeal make(int dim, std::vector<ExponentVector> gens, Exp characteristic = 0);

  static MonomialIdeal zero(int dim, Exp characteristic = 0) {
    return make(dim, {}, characteristic);
  }
  static MonomialIdeal unit(int dim, Exp characteristic = 0) {
    return make(dim, {ExponentVector(std::vector<Exp>(static_cast<size_t>(dim), 0))},
                characteristic);
  }

  int dim() const { return dim_; }
  Exp characteristic() const { return characteristic_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && gens_[0].total_degree() == 0;
  }

  bool operator==(const MonomialIdeal& other) const {
    return dim_ == other.dim_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

 private:
  int dim_ = 0;
  Exp characteristic_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Minimal elements of a set of exponent vectors (canonical sorted order).
std::vector<ExponentVector> minimal_vectors(std::vector<ExponentVector> vs);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, Exp n);

/// x^v in I?
bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& v);
/// J subseteq I?
bool ideal_leq(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// True iff every variable has a pure-power generator (equivalently, finite
/// colength).  The unit ideal qualifies.
bool is_m_primary(const MonomialIdeal& ideal);

/// Exponent of the pure-power generator of x_i, for m-primary ideals.
Exp pure_power_exponent(const MonomialIdeal& ideal, int var);

/// lambda(A/I): number of standard monomials.  Requires m-primary (or unit).
Exp colength(const MonomialIdeal& ideal);

/// lambda(I/J) for J subseteq I, both m-primary or unit.
Exp quotient_length(const MonomialIdeal& outer, const MonomialIdeal& inner);

/// Generator exponents scaled by q (the ideal generated by q-th bracket powers).
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, const BigInt& q);

/// Smallest J with I subseteq J^{[q]}: componentwise floor of generators.
MonomialIdeal frobenius_root(const MonomialIdeal& ideal, const BigInt& q);

std::string to_string(const ExponentVector& v, int dim);
std::string to_string(const MonomialIdeal& ideal);

}  // namespace mifilt
