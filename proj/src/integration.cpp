#include "holozeta/integration.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace holozeta {

WeylOperator fourier_transform(const WeylOperator& P) {
  const Ring& R = P.ring();
  const int n = R->n_x;
  WeylOperator out(R);
  for (const Term& t : P.terms()) {
    Monomial ds, xs, rest = t.mono;
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      ds[R->deriv(i)] = t.mono[R->coord(i)];
      xs[R->coord(i)] = t.mono[R->deriv(i)];
      if (t.mono[R->deriv(i)] % 2) sign = -sign;
      rest[R->coord(i)] = 0;
      rest[R->deriv(i)] = 0;
    }
    out += WeylOperator::monomial(R, ds, t.coeff * sign) * WeylOperator::monomial(R, xs) *
           WeylOperator::monomial(R, rest);
  }
  return out;
}

IdealPresentation fourier_transform(const IdealPresentation& J) {
  std::vector<WeylOperator> gens;
  for (const auto& g : J.generators()) gens.push_back(fourier_transform(g));
  return IdealPresentation(J.ring(), std::move(gens));
}

int restriction_weight(const RingSignature& sig, const Monomial& m) {
  int w = 0;
  for (int i = 0; i < sig.n_x; ++i) w += m[sig.deriv(i)] - m[sig.coord(i)];
  return w;
}

namespace {

int max_weight(const WeylOperator& g) {
  int w = INT_MIN;
  for (const Term& t : g.terms()) w = std::max(w, restriction_weight(*g.ring(), t.mono));
  return w;
}

WeylOperator initial_form(const WeylOperator& g) {
  const int w = max_weight(g);
  std::vector<Term> terms;
  for (const Term& t : g.terms())
    if (restriction_weight(*g.ring(), t.mono) == w) terms.push_back(t);
  return WeylOperator::from_terms(g.ring(), std::move(terms));
}

// All exponent vectors on the d-block of total degree <= k, by degree.
std::vector<Monomial> d_words(const RingSignature& sig, int k) {
  std::vector<Monomial> out;
  for (int deg = 0; deg <= k; ++deg) {
    Monomial m;
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == sig.n_x - 1 || sig.n_x == 0) {
        if (sig.n_x == 0) {
          if (left == 0) out.push_back(m);
          return;
        }
        m[sig.deriv(i)] = static_cast<std::uint16_t>(left);
        out.push_back(m);
        m[sig.deriv(i)] = 0;
        return;
      }
      for (int e = left; e >= 0; --e) {
        m[sig.deriv(i)] = static_cast<std::uint16_t>(e);
        rec(i + 1, left - e);
      }
      m[sig.deriv(i)] = 0;
    };
    rec(0, deg);
  }
  return out;
}

}  // namespace

std::vector<WeylOperator> weight_groebner(const IdealPresentation& J, const GbOptions& options) {
  const Ring& R = J.ring();
  if (!R->extra.empty()) throw InputError("restriction expects a ring without central variables");
  const Ring Rh = derive_ring(R, R->has_t, {Central::kH});
  const int h = Rh->central(Central::kH);
  std::vector<WeylOperator> gens;
  for (const auto& g0 : J.generators()) {
    if (g0.is_zero()) continue;
    const WeylOperator g = change_ring(g0, Rh);
    const int top = g.total_degree();
    std::vector<Term> terms;
    for (const Term& t : g.terms()) {
      Term x = t;
      x.mono[h] = static_cast<std::uint16_t>(top - t.mono.degree());
      terms.push_back(std::move(x));
    }
    gens.push_back(WeylOperator::from_terms(Rh, std::move(terms)));
  }
  TermOrder::Row deg{}, w{};
  for (int v = 0; v < Rh->num_vars(); ++v) deg[static_cast<std::size_t>(v)] = 1;
  for (int i = 0; i < R->n_x; ++i) {
    w[static_cast<std::size_t>(Rh->coord(i))] = -1;
    w[static_cast<std::size_t>(Rh->deriv(i))] = 1;
  }
  GbOptions opt = options;
  opt.stage = "restriction/weight-basis";
  const IdealPresentation gb =
      groebner(IdealPresentation(Rh, std::move(gens)), TermOrder::weighted(Rh->num_vars(), {deg, w}), opt);
  std::vector<WeylOperator> out;
  for (const auto& g : gb.basis()) {
    WeylOperator d = substitute_central(g, h, 1, R);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

UPoly weight_bfunction(const std::vector<WeylOperator>& wgb, const GbOptions& options) {
  if (wgb.empty()) throw InputError("not holonomic along restriction: zero ideal");
  const Ring& R = wgb.front().ring();
  std::vector<WeylOperator> in;
  for (const auto& g : wgb) in.push_back(initial_form(g));
  GbOptions opt = options;
  opt.stage = "restriction/bfunction";
  const TermOrder order = TermOrder::degrevlex(R->num_vars());
  const IdealPresentation gb = groebner(IdealPresentation(R, std::move(in)), order, opt);
  const std::vector<WeylOperator>& G = gb.basis();

  WeylOperator theta(R);
  for (int i = 0; i < R->n_x; ++i)
    theta += WeylOperator::variable(R, R->coord(i)) * WeylOperator::variable(R, R->deriv(i));

  // Echelon rows: reduced normal form, pivot = its leading word, and the
  // polynomial in theta it represents.
  struct Row {
    WeylOperator v;
    UPoly combo;
  };
  std::vector<Row> rows;
  WeylOperator cur = normal_form(WeylOperator::constant(R, 1), G, order).remainder;
  constexpr int kMaxDegree = 256;
  for (int k = 0; k <= kMaxDegree; ++k) {
    if (options.deadline && Clock::now() > *options.deadline) throw TimeoutError(opt.stage);
    if (k > 0) cur = normal_form(theta * cur, G, order).remainder;
    WeylOperator v = cur;
    UPoly combo = UPoly::monomial(k);
    for (bool changed = true; changed && !v.is_zero();) {
      changed = false;
      for (const Row& r : rows) {
        const Monomial& piv = r.v.leading().mono;
        for (const Term& t : v.terms()) {
          if (!(t.mono == piv)) continue;
          const Rational c = t.coeff / r.v.leading().coeff;
          v -= r.v * c;
          combo -= r.combo * c;
          changed = true;
          break;
        }
      }
    }
    if (v.is_zero()) return combo.monic();
    rows.push_back({std::move(v), std::move(combo)});
  }
  throw InputError("not holonomic along restriction: no weight b-function up to degree 256");
}

UPoly weight_bfunction(const IdealPresentation& J, const GbOptions& options) {
  return weight_bfunction(weight_groebner(J, options), options);
}

RestrictionData restriction(const IdealPresentation& J, const GbOptions& options) {
  const Ring& R = J.ring();
  if (!R->has_t) throw InputError("restriction expects the ring D_n<t, dt>");
  RestrictionData out;
  out.d1 = weyl_ring({}, true);
  const std::vector<WeylOperator> G = weight_groebner(J, options);
  out.bw = weight_bfunction(G, options);
  for (const auto& r : rational_roots(out.bw))
    if (r.root >= 0 && r.root.get_den() == 1) {
      const int k = static_cast<int>(r.root.get_num().get_si());
      if (!out.k0 || k > *out.k0) out.k0 = k;
    }
  if (!out.k0) return out;
  const int k0 = *out.k0;
  out.basis = d_words(*R, k0);
  const auto index_of = [&](const Monomial& m) {
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
      bool eq = true;
      for (int j = 0; j < R->n_x && eq; ++j) eq = out.basis[i][R->deriv(j)] == m[R->deriv(j)];
      if (eq) return static_cast<int>(i);
    }
    throw InternalError("restriction produced a word above the truncation degree");
  };
  const int t = R->t_index(), dt = R->dt_index();
  for (const auto& g : G) {
    const int ord = max_weight(g);
    if (ord > k0) continue;
    for (const Monomial& beta : d_words(*R, k0 - ord)) {
      if (options.deadline && Clock::now() > *options.deadline) throw TimeoutError("restriction/relations");
      const WeylOperator p = WeylOperator::monomial(R, beta) * g;
      OperatorVector rel(out.basis.size(), WeylOperator(out.d1));
      for (const Term& term : p.terms()) {
        bool has_x = false;
        for (int i = 0; i < R->n_x; ++i) has_x = has_x || term.mono[R->coord(i)];
        if (has_x) continue;
        Monomial m;
        m[out.d1->t_index()] = term.mono[t];
        m[out.d1->dt_index()] = term.mono[dt];
        rel[static_cast<std::size_t>(index_of(term.mono))] += WeylOperator::monomial(out.d1, m, term.coeff);
      }
      if (std::any_of(rel.begin(), rel.end(), [](const WeylOperator& c) { return !c.is_zero(); }))
        out.relations.push_back(std::move(rel));
    }
  }
  return out;
}

namespace {

IdealPresentation class_annihilator(const RestrictionData& r, const GbOptions& options) {
  const TermOrder order = TermOrder::degrevlex(r.d1->num_vars());
  if (!r.k0) return groebner(IdealPresentation(r.d1, {WeylOperator::constant(r.d1, 1)}), order, options);
  const int N = static_cast<int>(r.basis.size());
  OperatorVector e0(static_cast<std::size_t>(N), WeylOperator(r.d1));
  e0[0] = WeylOperator::constant(r.d1, 1);
  GbOptions opt = options;
  opt.stage = "integration/colon";
  return colon_kernel(e0, SubmodulePresentation(r.d1, N, r.relations), order, opt);
}

}  // namespace

IdealPresentation integration_ideal(const IdealPresentation& J, const GbOptions& options) {
  return class_annihilator(restriction(fourier_transform(J), options), options);
}

// ---- difference operators ----

DifferenceOperator::DifferenceOperator(std::map<int, UPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

DifferenceOperator DifferenceOperator::shift(int k) {
  return DifferenceOperator({{k, UPoly::constant(1)}});
}

DifferenceOperator DifferenceOperator::scalar(const UPoly& a) { return DifferenceOperator({{0, a}}); }

UPoly DifferenceOperator::coeff(int k) const {
  const auto it = c_.find(k);
  return it == c_.end() ? UPoly() : it->second;
}

void DifferenceOperator::trim() {
  for (auto it = c_.begin(); it != c_.end();) it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

DifferenceOperator& DifferenceOperator::operator+=(const DifferenceOperator& o) {
  for (const auto& [k, a] : o.c_) c_[k] += a;
  trim();
  return *this;
}

DifferenceOperator& DifferenceOperator::operator-=(const DifferenceOperator& o) {
  for (const auto& [k, a] : o.c_) c_[k] -= a;
  trim();
  return *this;
}

DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b) {
  std::map<int, UPoly> out;
  for (const auto& [i, p] : a.c_)
    for (const auto& [j, q] : b.c_) out[i + j] += p * q.shift(i);
  return DifferenceOperator(std::move(out));
}

DifferenceOperator operator*(const UPoly& a, const DifferenceOperator& b) {
  std::map<int, UPoly> out;
  for (const auto& [k, q] : b.c_) out[k] = a * q;
  return DifferenceOperator(std::move(out));
}

DifferenceOperator DifferenceOperator::normalized() const {
  if (is_zero()) return *this;
  const int m = min_power();
  std::map<int, UPoly> out;
  for (const auto& [k, a] : c_) out[k - m] = a.shift(-m);
  Integer den = 1, num = 0;
  for (const auto& [k, a] : out)
    for (const Rational& q : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& [k, a] : out)
    for (const Rational& q : a.coeffs()) {
      const Integer z = q.get_num() * (den / q.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
    }
  Rational f(den, num);
  f.canonicalize();
  if (out.rbegin()->second.leading() < 0) f = -f;
  for (auto& [k, a] : out) a *= f;
  return DifferenceOperator(std::move(out));
}

namespace {

std::string compact(const UPoly& p) {
  std::string s = p.str("s");
  std::erase(s, ' ');
  return s;
}

int nonzero_terms(const UPoly& p) {
  return static_cast<int>(std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                        [](const Rational& q) { return q != 0; }));
}

}  // namespace

std::string DifferenceOperator::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int k = it->first;
    UPoly a = it->second;
    const bool neg = a.leading() < 0;
    if (neg) a = -a;
    std::string body;
    const std::string e = k == 0 ? "" : (k == 1 ? "E" : "E^" + std::to_string(k));
    if (a.degree() == 0) {
      if (a.leading() == 1 && !e.empty())
        body = e;
      else
        body = to_string(a.leading()) + (e.empty() ? "" : "*" + e);
    } else {
      body = nonzero_terms(a) > 1 ? "(" + compact(a) + ")" : compact(a);
      if (!e.empty()) body += "*" + e;
    }
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

DifferenceOperator mellin(const WeylOperator& P) {
  const RingSignature& sig = *P.ring();
  if (!sig.has_t) throw InputError("the Mellin transform needs an operator in (t, dt)");
  std::map<int, UPoly> out;
  for (const Term& term : P.terms()) {
    for (int v = 0; v < sig.num_vars(); ++v)
      if (term.mono[v] && v != sig.t_index() && v != sig.dt_index())
        throw InputError("the Mellin transform applies to operators in t and dt only");
    const int a = term.mono[sig.t_index()], b = term.mono[sig.dt_index()];
    // t^a dt^b -> (-1)^b (s+a)(s+a-1)...(s+a-b+1) E^(a-b)
    UPoly p = UPoly::constant(b % 2 ? Rational(-term.coeff) : term.coeff);
    for (int i = 0; i < b; ++i) p = p * UPoly::linear(Rational(i - a));
    out[a - b] += p;
  }
  return DifferenceOperator(std::move(out));
}

std::vector<DifferenceOperator> mellin_to_difference(const IdealPresentation& ideal) {
  std::vector<DifferenceOperator> out;
  for (const auto& g : ideal.best_generators()) {
    DifferenceOperator L = mellin(g).normalized();
    if (L.is_zero()) continue;
    if (std::find(out.begin(), out.end(), L) == out.end()) out.push_back(std::move(L));
  }
  return out;
}

namespace {

// Divides out the gcd in Q[s] of all coefficients; left multiplication by a
// unit of Q(s) does not change the generated left ideal.
DifferenceOperator primitive_part(const DifferenceOperator& L) {
  if (L.is_zero()) return L;
  UPoly g;
  for (const auto& [k, a] : L.coeffs()) {
    g = g.is_zero() ? a.monic() : gcd(g, a);
    if (g.degree() == 0) return L.normalized();
  }
  std::map<int, UPoly> out;
  for (const auto& [k, a] : L.coeffs()) out[k] = exact_quotient(a, g);
  return DifferenceOperator(std::move(out)).normalized();
}

}  // namespace

DifferenceOperator right_remainder(const DifferenceOperator& L0, const DifferenceOperator& A) {
  if (A.is_zero()) throw InputError("division by the zero difference operator");
  DifferenceOperator L = primitive_part(L0);
  const DifferenceOperator An = primitive_part(A);
  const int q = An.max_power();  // min power of An is 0
  const UPoly& aq = An.coeff(q);
  while (!L.is_zero() && L.order() >= An.order()) {
    const int p = L.max_power();
    const UPoly lp = L.coeff(p);
    const int shift = p - q;
    L = aq.shift(shift) * L - lp * (DifferenceOperator::shift(shift) * An);
    L = primitive_part(L);
  }
  return L;
}

DifferenceOperator gcrd(const std::vector<DifferenceOperator>& ops) {
  DifferenceOperator g;
  for (const auto& op : ops) {
    if (op.is_zero()) continue;
    if (g.is_zero()) {
      g = primitive_part(op);
      continue;
    }
    DifferenceOperator a = g, b = primitive_part(op);
    if (a.order() < b.order()) std::swap(a, b);
    while (!b.is_zero()) {
      DifferenceOperator r = right_remainder(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    g = primitive_part(a);
  }
  if (!g.is_zero() && g.order() == 0) return DifferenceOperator::shift(0);
  return g;
}

bool in_left_ideal(const DifferenceOperator& L, const std::vector<DifferenceOperator>& ops) {
  if (L.is_zero()) return true;
  const DifferenceOperator g = gcrd(ops);
  if (g.is_zero()) return false;
  return right_remainder(L, g).is_zero();
}

ZetaResult zeta_difference(const ProblemInstance& inst, const GbOptions& options) {
  ZetaResult out;
  const RestrictionData r = restriction(fourier_transform(build_malgrange(inst)), options);
  out.bw = r.bw;
  out.k0 = r.k0;
  out.d1_ideal = class_annihilator(r, options);
  out.ops = mellin_to_difference(out.d1_ideal);
  return out;
}

}  // namespace holozeta
