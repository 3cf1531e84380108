#include "holozeta/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "holozeta/ring.hpp"

namespace holozeta {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear(const Rational& root) { return UPoly({Rational(-root), Rational(1)}); }

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& c : c_) c *= k;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double UPoly::eval(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

UPoly UPoly::shift(const Rational& a) const {
  // Horner with (s + a)
  UPoly acc;
  const UPoly lin({a, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly::constant(*it);
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

std::vector<Integer> UPoly::integer_coeffs() const {
  if (is_zero()) return {};
  Integer den = 1, g = 0;
  for (const Rational& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const Rational& c : c_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (Integer& v : out) v /= g;
  return out;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string word;
    if (i > 0) word = var + (i > 1 ? "^" + std::to_string(i) : "");
    std::string body;
    if (word.empty()) body = mag.get_str();
    else if (mag == 1) body = word;
    else body = mag.get_str() + "*" + word;
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? UPoly() : r.monic();
  }
  return x.monic();
}

int root_multiplicity(const UPoly& p, const Rational& r) {
  if (p.is_zero()) throw InternalError("root multiplicity of the zero polynomial");
  int m = 0;
  UPoly q = p;
  const UPoly lin = UPoly::linear(r);
  while (q.degree() > 0 && q.eval(r) == 0) {
    q = exact_quotient(q, lin);
    ++m;
  }
  return m;
}

namespace {

const Integer kTrialLimit("1000000000000");

std::vector<Integer> divisors(const Integer& n) {
  // n > 0, small enough for trial division
  std::vector<std::pair<unsigned long long, int>> fac;
  unsigned long long v = n.get_ui();
  for (unsigned long long p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e) fac.push_back({p, e});
  }
  if (v > 1) fac.push_back({v, 1});
  std::vector<Integer> out{Integer(1)};
  for (auto [p, e] : fac) {
    const std::size_t sz = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= static_cast<unsigned long>(p);
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// q^n * P(p/q) for the integer coefficient vector P.
bool vanishes_at(const std::vector<Integer>& P, const Integer& p, const Integer& q) {
  Integer acc = 0, qpow = 1;
  // Horner in homogeneous form: sum a_i p^i q^(n-i)
  for (auto it = P.rbegin(); it != P.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  return acc == 0;
}

std::vector<Rational> candidates_by_divisors(const std::vector<Integer>& P) {
  std::vector<Rational> out;
  const Integer a0 = abs(P.front()), an = abs(P.back());
  const auto dp = divisors(a0), dq = divisors(an);
  for (const Integer& q : dq) {
    for (const Integer& p : dp) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        const Integer ps = sign * p;
        if (vanishes_at(P, ps, q)) out.push_back(Rational(ps, q));
      }
    }
  }
  return out;
}

// Numeric fallback for coefficients too large to factor by trial division:
// Durand-Kerner roots of the square-free part, rounded by continued fractions.
std::vector<Rational> candidates_numeric(const UPoly& p, const std::vector<Integer>& P) {
  const UPoly sqf = exact_quotient(p, gcd(p, p.derivative())).monic();
  const int n = sqf.degree();
  using C = std::complex<long double>;
  std::vector<C> z(static_cast<std::size_t>(n));
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i);
  auto eval = [&](C x) {
    C acc = 0;
    for (auto it = sqf.coeffs().rbegin(); it != sqf.coeffs().rend(); ++it)
      acc = acc * x + C(static_cast<long double>(it->get_d()), 0);
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      const C step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-16L) break;
  }
  std::vector<Rational> out;
  const Integer an = abs(P.back());
  for (const C& r : z) {
    if (std::abs(r.imag()) > 1e-6L * (1 + std::abs(r.real()))) continue;
    // convergents of the continued fraction of r.real()
    long double x = r.real();
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 40; ++it) {
      const long double a = std::floor(x);
      const Integer ai(static_cast<double>(a));
      const Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
      if (abs(k2) > an) break;
      if (vanishes_at(P, h2, k2)) {
        out.push_back(Rational(h2, k2));
        break;
      }
      h0 = h1, h1 = h2, k0 = k1, k1 = k2;
      const long double frac = x - a;
      if (frac < 1e-18L) break;
      x = 1 / frac;
    }
  }
  for (Rational& q : out) q.canonicalize();
  return out;
}

}  // namespace

std::vector<RootMultiplicity> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw InternalError("roots of the zero polynomial");
  std::vector<RootMultiplicity> out;
  std::vector<Integer> P = p.integer_coeffs();
  int zero_mult = 0;
  while (P.size() > 1 && P.front() == 0) {
    P.erase(P.begin());
    ++zero_mult;
  }
  if (zero_mult) out.push_back({Rational(0), zero_mult});
  if (P.size() > 1) {
    const UPoly reduced = exact_quotient(p, UPoly::monomial(zero_mult));
    std::vector<Rational> cands;
    if (abs(P.front()) <= kTrialLimit && abs(P.back()) <= kTrialLimit)
      cands = candidates_by_divisors(P);
    else
      cands = candidates_numeric(reduced, P);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Rational& r : cands) out.push_back({r, root_multiplicity(reduced, r)});
  }
  std::sort(out.begin(), out.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
  return out;
}

namespace {

std::string integer_poly_compact(const std::vector<Integer>& P, const std::string& var) {
  std::string out;
  for (int i = static_cast<int>(P.size()) - 1; i >= 0; --i) {
    const Integer& c = P[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Integer mag = abs(c);
    std::string body;
    if (i == 0) body = mag.get_str();
    else body = (mag == 1 ? "" : mag.get_str()) + var + (i > 1 ? "^" + std::to_string(i) : "");
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? "-" : "+") + body;
  }
  return out;
}

}  // namespace

std::string factored_string(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return "1";
  const BFunction b = BFunction::from(p);
  struct Factor {
    Integer q, p;
    int mult;
  };
  std::vector<Factor> fs;
  for (const auto& r : b.roots) fs.push_back({r.root.get_den(), Integer(-r.root.get_num()), r.multiplicity});
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& c) {
    return a.q != c.q ? a.q < c.q : a.p < c.p;
  });
  std::string out;
  for (const Factor& f : fs) {
    std::string body = integer_poly_compact({f.p, f.q}, var);
    body = f.p == 0 ? var : "(" + body + ")";
    if (f.mult > 1) body += "^" + std::to_string(f.mult);
    out += body;
  }
  if (b.nonrational_part.degree() > 0)
    out += "(" + integer_poly_compact(b.nonrational_part.integer_coeffs(), var) + ")";
  return out;
}

BFunction BFunction::from(const UPoly& p) {
  if (p.is_zero()) throw InternalError("b-function from the zero polynomial");
  BFunction b;
  b.poly = p.monic();
  b.roots = rational_roots(b.poly);
  UPoly rest = b.poly;
  for (const auto& r : b.roots)
    for (int i = 0; i < r.multiplicity; ++i) rest = exact_quotient(rest, UPoly::linear(r.root));
  std::vector<Rational> ic;
  for (const Integer& z : rest.integer_coeffs()) ic.emplace_back(z);
  b.nonrational_part = UPoly(std::move(ic));
  return b;
}

}  // namespace holozeta
