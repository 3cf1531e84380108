#include "holozeta/operator.hpp"

#include <algorithm>
#include <unordered_map>

namespace holozeta {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || !digit) throw InputError("malformed rational '" + s + "'");
      slash = true;
      digit = false;
    } else if (s[j] >= '0' && s[j] <= '9') {
      digit = true;
    } else {
      throw InputError("malformed rational '" + s + "'");
    }
  }
  if (!digit) throw InputError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

void canonicalize(const RingSignature& sig, std::vector<Term>& terms) {
  const int nv = sig.num_vars();
  std::sort(terms.begin(), terms.end(), [nv](const Term& a, const Term& b) {
    return canonical_greater(a.mono, b.mono, nv);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

void require_same(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw InputError("operands belong to different rings");
}

// Merge of two canonical term lists with sign.
std::vector<Term> merge(const RingSignature& sig, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  const int nv = sig.num_vars();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].mono, b[j].mono, nv))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].mono, a[i].mono, nv)) {
      out.push_back({subtract ? Rational(-b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({std::move(c), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

WeylOperator WeylOperator::constant(Ring ring, const Rational& c) {
  WeylOperator op(std::move(ring));
  if (c != 0) op.terms_.push_back({c, Monomial{}});
  return op;
}

WeylOperator WeylOperator::variable(Ring ring, int v) {
  if (v < 0 || v >= ring->num_vars()) throw InternalError("variable index out of range");
  Monomial m;
  m[v] = 1;
  return monomial(std::move(ring), m);
}

WeylOperator WeylOperator::monomial(Ring ring, const Monomial& m, const Rational& c) {
  WeylOperator op(std::move(ring));
  if (c != 0) op.terms_.push_back({c, m});
  return op;
}

WeylOperator WeylOperator::from_terms(Ring ring, std::vector<Term> terms) {
  WeylOperator op(std::move(ring));
  canonicalize(*op.ring_, terms);
  op.terms_ = std::move(terms);
  return op;
}

const Term& WeylOperator::leading(const TermOrder& order) const {
  if (terms_.empty()) throw InternalError("leading term of zero operator");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

bool WeylOperator::free_of(const std::vector<int>& vars) const {
  for (const Term& t : terms_)
    for (int v : vars)
      if (t.mono[v]) return false;
  return true;
}

int WeylOperator::max_exponent(int v) const {
  int m = 0;
  for (const Term& t : terms_) m = std::max<int>(m, t.mono[v]);
  return m;
}

int WeylOperator::total_degree() const {
  int m = 0;
  for (const Term& t : terms_) m = std::max(m, t.mono.degree());
  return m;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  require_same(ring_, o.ring_);
  terms_ = merge(*ring_, terms_, o.terms_, false);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  require_same(ring_, o.ring_);
  terms_ = merge(*ring_, terms_, o.terms_, true);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return multiply(a, b); }

bool WeylOperator::operator==(const WeylOperator& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && !same_ring(ring_, o.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

WeylOperator WeylOperator::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / terms_[0].coeff);
}

WeylOperator WeylOperator::monic(const TermOrder& order) const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading(order).coeff);
}

WeylOperator WeylOperator::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const Term& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (terms_[0].coeff < 0) scale = -scale;
  return *this * scale;
}

WeylOperator multiply(const WeylOperator& a, const WeylOperator& b) {
  if (a.is_zero() || b.is_zero()) {
    WeylOperator z(a.ring() ? a.ring() : b.ring());
    return z;
  }
  require_same(a.ring(), b.ring());
  const RingSignature& sig = *a.ring();
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size() * 2);
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      const Rational c = ta.coeff * tb.coeff;
      multiply_words(sig, ta.mono, tb.mono, [&](const Integer& f, const Monomial& m) {
        acc[m] += c * f;
      });
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({c, m});
  return WeylOperator::from_terms(a.ring(), std::move(terms));
}

WeylOperator power(const WeylOperator& a, unsigned k) {
  WeylOperator r = WeylOperator::constant(a.ring(), 1);
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

WeylOperator change_ring(const WeylOperator& op, const Ring& target) {
  const RingSignature& src = *op.ring();
  std::vector<int> map(static_cast<std::size_t>(src.num_vars()), -1);
  for (int v = 0; v < src.num_vars(); ++v) map[v] = target->find_var(src.var_name(v));
  std::vector<Term> terms;
  terms.reserve(op.size());
  for (const Term& t : op.terms()) {
    Monomial m;
    m.comp = t.mono.comp;
    for (int v = 0; v < src.num_vars(); ++v) {
      if (!t.mono[v]) continue;
      if (map[v] < 0)
        throw InputError("generator '" + src.var_name(v) + "' does not exist in the target ring");
      m[map[v]] = t.mono[v];
    }
    terms.push_back({t.coeff, m});
  }
  return WeylOperator::from_terms(target, std::move(terms));
}

bool is_polynomial(const WeylOperator& f) {
  const RingSignature& sig = *f.ring();
  for (const Term& t : f.terms())
    for (int p = 0; p < sig.pairs(); ++p)
      if (t.mono[sig.deriv(p)]) return false;
  return true;
}

WeylOperator poly_derivative(const WeylOperator& f, int i) {
  if (!is_polynomial(f)) throw InputError("derivative of a non-polynomial operator");
  const int v = f.ring()->coord(i);
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    if (!t.mono[v]) continue;
    Monomial m = t.mono;
    m[v] = static_cast<std::uint16_t>(m[v] - 1);
    terms.push_back({t.coeff * t.mono[v], m});
  }
  return WeylOperator::from_terms(f.ring(), std::move(terms));
}

WeylOperator substitute_central(const WeylOperator& op, int var, const Rational& value,
                                const Ring& target) {
  std::vector<Term> terms;
  for (const Term& t : op.terms()) {
    Rational c = t.coeff;
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), t.mono[var]);
    mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), t.mono[var]);
    c *= p;
    Monomial m = t.mono;
    m[var] = 0;
    terms.push_back({c, m});
  }
  WeylOperator flat = WeylOperator::from_terms(op.ring(), std::move(terms));
  return change_ring(flat, target);
}

WeylOperator shift_central(const WeylOperator& op, int var, const Rational& shift) {
  // (s + a)^e expanded binomially
  std::vector<Term> terms;
  for (const Term& t : op.terms()) {
    const unsigned e = t.mono[var];
    Rational apow = 1;
    for (unsigned j = 0; j <= e; ++j) {
      // coefficient of s^(e-j): C(e,j) a^j
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), e, j);
      Monomial m = t.mono;
      m[var] = static_cast<std::uint16_t>(e - j);
      Rational c = t.coeff * apow * binom;
      if (c != 0) terms.push_back({c, m});
      apow *= shift;
    }
  }
  return WeylOperator::from_terms(op.ring(), std::move(terms));
}

WeylOperator central_derivative(const WeylOperator& op, int var) {
  std::vector<Term> terms;
  for (const Term& t : op.terms()) {
    if (!t.mono[var]) continue;
    Monomial m = t.mono;
    m[var] = static_cast<std::uint16_t>(m[var] - 1);
    terms.push_back({t.coeff * t.mono[var], m});
  }
  return WeylOperator::from_terms(op.ring(), std::move(terms));
}

}  // namespace holozeta
