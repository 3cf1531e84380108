#ifndef HOLOZETA_UPOLY_HPP
#define HOLOZETA_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "holozeta/rational.hpp"

namespace holozeta {

// Dense polynomial in one variable over Q; coeffs()[i] multiplies s^i and
// the top coefficient is nonzero (zero polynomial: empty).
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  static UnivariatePolynomial constant(const Rational& c);
  static UnivariatePolynomial monomial(int degree, const Rational& c = 1);
  // s - root
  static UnivariatePolynomial linear(const Rational& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator*=(const Rational& k);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& k) { return a *= k; }
  friend UnivariatePolynomial operator*(const Rational& k, UnivariatePolynomial a) { return a *= k; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  UnivariatePolynomial operator-() const;
  bool operator==(const UnivariatePolynomial&) const = default;

  Rational eval(const Rational& x) const;
  long double eval(long double x) const;
  // p(s + a)
  UnivariatePolynomial shift(const Rational& a) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  // Integer coefficients, gcd 1, positive leading coefficient.
  std::vector<Integer> integer_coeffs() const;

  // Canonical text, e.g. "s^3 + 2*s - 1/2"; parses back with the operator parser.
  std::string str(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

using UPoly = UnivariatePolynomial;

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Throws InternalError when b does not divide a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct RootMultiplicity {
  Rational root;
  int multiplicity = 0;
  bool operator==(const RootMultiplicity&) const = default;
};

// All rational roots with multiplicities, ascending.
std::vector<RootMultiplicity> rational_roots(const UPoly& p);

// Multiplicity of r as a root of p (0 if not a root).
int root_multiplicity(const UPoly& p, const Rational& r);

// Integer-cleared factored form of p up to a scalar, e.g. "(s+1)(6s+5)(6s+7)".
std::string factored_string(const UPoly& p, const std::string& var = "s");

// Monic b-function with its rational root data.
struct BFunction {
  UPoly poly;
  std::vector<RootMultiplicity> roots;
  UPoly nonrational_part;  // integer coefficients, no rational roots

  static BFunction from(const UPoly& p);
  std::string factored() const { return factored_string(poly); }
};

}  // namespace holozeta

#endif  // HOLOZETA_UPOLY_HPP
