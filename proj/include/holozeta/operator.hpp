#ifndef HOLOZETA_OPERATOR_HPP
#define HOLOZETA_OPERATOR_HPP

#include <string>
#include <vector>

#include "holozeta/monomial.hpp"
#include "holozeta/rational.hpp"
#include "holozeta/ring.hpp"
#include "holozeta/term_order.hpp"

namespace holozeta {

struct Term {
  Rational coeff;
  Monomial mono;
};

// Element of a Weyl-type algebra in normally ordered form. Terms are kept
// strictly descending in the degrevlex order of the ring with nonzero
// coefficients; the zero operator has no terms.
class WeylOperator {
 public:
  WeylOperator() = default;
  explicit WeylOperator(Ring ring) : ring_(std::move(ring)) {}

  static WeylOperator constant(Ring ring, const Rational& c);
  static WeylOperator variable(Ring ring, int v);
  static WeylOperator monomial(Ring ring, const Monomial& m, const Rational& c = 1);
  // Sorts, merges duplicates and drops zeros.
  static WeylOperator from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  // Leading term under an arbitrary order.
  const Term& leading(const TermOrder& order) const;

  // True if all exponents of the listed variables vanish in every term.
  bool free_of(const std::vector<int>& vars) const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  int max_exponent(int v) const;
  int total_degree() const;

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const Rational& c);
  WeylOperator operator-() const;

  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Rational& c) { return a *= c; }
  friend WeylOperator operator*(const Rational& c, WeylOperator a) { return a *= c; }
  // Normally ordered product in the algebra.
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);

  bool operator==(const WeylOperator& o) const;

  // Divides by the leading coefficient (no-op on zero).
  WeylOperator monic() const;
  WeylOperator monic(const TermOrder& order) const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  WeylOperator primitive() const;

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

// Canonical order used for storing operators.
inline bool canonical_greater(const Monomial& a, const Monomial& b, int nvars) {
  if (a.comp != b.comp) return a.comp > b.comp;
  int da = 0, db = 0;
  for (int v = 0; v < nvars; ++v) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da > db;
  for (int v = nvars - 1; v >= 0; --v)
    if (a[v] != b[v]) return a[v] < b[v];
  return false;
}

WeylOperator multiply(const WeylOperator& a, const WeylOperator& b);
WeylOperator power(const WeylOperator& a, unsigned k);

// Expands mono_a * mono_b by the Leibniz rule d^k x^l = sum_j C(k,j) l!/(l-j)! x^(l-j) d^(k-j)
// (times h^(2j) in a homogenized ring). `emit(factor, monomial)` is called for
// every resulting word; factors are positive integers. Components add.
template <class Emit>
void multiply_words(const RingSignature& sig, const Monomial& a, const Monomial& b, Emit&& emit);

// Rebuilds `op` in `target`, mapping generators by name. Throws InputError
// if a generator with a nonzero exponent has no counterpart.
WeylOperator change_ring(const WeylOperator& op, const Ring& target);

// Partial derivative of a commutative polynomial (an operator free of d's)
// with respect to x_i.
WeylOperator poly_derivative(const WeylOperator& f, int i);
bool is_polynomial(const WeylOperator& f);  // no derivations present

// Substitutes a rational value for a central variable and moves the result
// into `target` (which lacks that variable).
WeylOperator substitute_central(const WeylOperator& op, int var, const Rational& value,
                                const Ring& target);
// Replaces s by s + shift (s central).
WeylOperator shift_central(const WeylOperator& op, int var, const Rational& shift);
// d/ds for a central variable s.
WeylOperator central_derivative(const WeylOperator& op, int var);

}  // namespace holozeta

#include "holozeta/detail/multiply_words.hpp"

#endif  // HOLOZETA_OPERATOR_HPP
