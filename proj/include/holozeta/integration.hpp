#ifndef HOLOZETA_INTEGRATION_HPP
#define HOLOZETA_INTEGRATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holozeta/annihilator.hpp"

namespace holozeta {

// x_j -> d_j, d_j -> -x_j on the x-block; every other generator is fixed.
WeylOperator fourier_transform(const WeylOperator& P);
IdealPresentation fourier_transform(const IdealPresentation& J);

// Weight of a word under x_j: -1, d_j: +1 (t, dt and central variables: 0).
int restriction_weight(const RingSignature& sig, const Monomial& m);

// Basis of J that is a Groebner basis for the weight (-1 on x, +1 on dx),
// obtained through the homogenized Weyl algebra.
std::vector<WeylOperator> weight_groebner(const IdealPresentation& J, const GbOptions& options = {});

// Generator of in(J) intersected with Q[theta], theta = sum x_j dx_j. `wgb`
// is the output of weight_groebner.
UPoly weight_bfunction(const std::vector<WeylOperator>& wgb, const GbOptions& options = {});
UPoly weight_bfunction(const IdealPresentation& J, const GbOptions& options = {});

struct RestrictionData {
  UPoly bw;
  std::optional<int> k0;          // none: the restriction vanishes
  std::vector<Monomial> basis;    // d-words of degree <= k0
  Ring d1;                        // (t, dt)
  std::vector<OperatorVector> relations;
};

// Restriction of D_{n+1}/J to x = 0 as a quotient of a free D_1-module.
RestrictionData restriction(const IdealPresentation& J, const GbOptions& options = {});

// Annihilator in D_1 = Q<t, dt> of the class of 1 in D_{n+1}/(J + sum dx_j D_{n+1}).
IdealPresentation integration_ideal(const IdealPresentation& J, const GbOptions& options = {});

// Sum_k a_k(s) E^k with E s = (s+1) E and coefficients written on the left.
class DifferenceOperator {
 public:
  DifferenceOperator() = default;
  explicit DifferenceOperator(std::map<int, UPoly> coeffs);

  static DifferenceOperator shift(int k);  // E^k
  static DifferenceOperator scalar(const UPoly& a);

  const std::map<int, UPoly>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int min_power() const { return c_.begin()->first; }
  int max_power() const { return c_.rbegin()->first; }
  int order() const { return is_zero() ? -1 : max_power() - min_power(); }
  UPoly coeff(int k) const;

  DifferenceOperator& operator+=(const DifferenceOperator& o);
  DifferenceOperator& operator-=(const DifferenceOperator& o);
  friend DifferenceOperator operator+(DifferenceOperator a, const DifferenceOperator& b) { return a += b; }
  friend DifferenceOperator operator-(DifferenceOperator a, const DifferenceOperator& b) { return a -= b; }
  friend DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b);
  // left multiplication by a polynomial in s
  friend DifferenceOperator operator*(const UPoly& a, const DifferenceOperator& b);
  bool operator==(const DifferenceOperator&) const = default;

  // Left-multiplied by E^(-min power), integer coefficients with content 1,
  // top coefficient with positive leading sign.
  DifferenceOperator normalized() const;

  // e.g. "E^2 - (s+2)*E - 1"
  std::string str() const;

 private:
  void trim();
  std::map<int, UPoly> c_;
};

// Image of an operator in Q<t, dt>: t -> E, dt -> -s E^(-1).
DifferenceOperator mellin(const WeylOperator& P);
std::vector<DifferenceOperator> mellin_to_difference(const IdealPresentation& ideal);

// Remainder of L modulo the left ideal Q(s)<E> A (pseudo-division; the
// result is defined up to a nonzero polynomial factor).
DifferenceOperator right_remainder(const DifferenceOperator& L, const DifferenceOperator& A);
// Generator of the left ideal of Q(s)<E> spanned by ops (normalized).
DifferenceOperator gcrd(const std::vector<DifferenceOperator>& ops);
bool in_left_ideal(const DifferenceOperator& L, const std::vector<DifferenceOperator>& ops);

// Difference equations satisfied by the local zeta function of inst.
struct ZetaResult {
  IdealPresentation d1_ideal;
  std::vector<DifferenceOperator> ops;  // normalized, duplicates removed
  std::optional<int> k0;
  UPoly bw;
};
ZetaResult zeta_difference(const ProblemInstance& inst, const GbOptions& options = {});

}  // namespace holozeta

#endif  // HOLOZETA_INTEGRATION_HPP
