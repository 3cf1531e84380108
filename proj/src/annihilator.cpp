#include "holozeta/annihilator.hpp"

#include <algorithm>
#include <climits>

#include "holozeta/format.hpp"

namespace holozeta {

ProblemInstance ProblemInstance::make(Ring dn, WeylOperator f, std::vector<WeylOperator> I,
                                      bool saturated) {
  if (dn->has_t || !dn->extra.empty()) throw InputError("base ring must be a plain Weyl algebra");
  if (f.is_zero() || !same_ring(f.ring(), dn)) throw InputError("f must be a nonzero polynomial in the base ring");
  if (!is_polynomial(f)) throw InputError("f must not contain derivations");
  if (f.is_constant()) throw InputError("f must be non-constant");
  if (I.empty()) throw InputError("the annihilating ideal needs at least one generator");
  for (const auto& g : I)
    if (!g.is_zero() && !same_ring(g.ring(), dn)) throw InputError("annihilator generator in a different ring");
  ProblemInstance p;
  p.dn = dn;
  p.dns = derive_ring(dn, false, {Central::kS});
  p.dn1 = derive_ring(dn, true, {});
  p.f = std::move(f);
  p.I = std::move(I);
  p.saturated = saturated;
  return p;
}

ProblemInstance ProblemInstance::parse(const std::vector<std::string>& vars, const std::string& f,
                                       const std::vector<std::string>& I, bool saturated) {
  Ring dn = weyl_ring(vars);
  std::vector<WeylOperator> gens;
  for (std::size_t i = 0; i < I.size(); ++i) gens.push_back(parse_operator(I[i], dn, static_cast<int>(i) + 1));
  return make(dn, parse_operator(f, dn), std::move(gens), saturated);
}

WeylOperator tau_substitute(const WeylOperator& P, const WeylOperator& f, const Ring& target) {
  const RingSignature& src = *P.ring();
  const int n = src.n_x;
  if (target->n_x != n || !target->has_t) throw InputError("tau substitution needs the ring with (t, dt)");
  const WeylOperator dt = WeylOperator::variable(target, target->dt_index());
  std::vector<WeylOperator> T;
  for (int i = 0; i < n; ++i)
    T.push_back(WeylOperator::variable(target, target->deriv(i)) +
                change_ring(poly_derivative(change_ring(f, P.ring()), i), target) * dt);
  // powers of T_i on demand
  std::vector<std::vector<WeylOperator>> pw(static_cast<std::size_t>(n));
  auto tpow = [&](int i, int e) -> const WeylOperator& {
    auto& v = pw[static_cast<std::size_t>(i)];
    if (v.empty()) v.push_back(WeylOperator::constant(target, 1));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * T[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(e)];
  };
  WeylOperator out(target);
  for (const Term& t : P.terms()) {
    Monomial xs;
    for (int v = 0; v < src.num_vars(); ++v) {
      if (src.is_deriv(v) && src.pair_of(v) < n) continue;
      if (!t.mono[v]) continue;
      const int tv = target->find_var(src.var_name(v));
      if (tv < 0) throw InputError("generator '" + src.var_name(v) + "' has no image under tau");
      xs[tv] = t.mono[v];
    }
    WeylOperator acc = WeylOperator::monomial(target, xs, t.coeff);
    for (int i = 0; i < n; ++i)
      if (const int e = t.mono[src.deriv(i)]) acc = acc * tpow(i, e);
    out += acc;
  }
  return out;
}

IdealPresentation build_malgrange(const ProblemInstance& inst) {
  std::vector<WeylOperator> gens;
  for (const auto& P : inst.I) gens.push_back(tau_substitute(P, inst.f, inst.dn1));
  gens.push_back(WeylOperator::variable(inst.dn1, inst.dn1->t_index()) - change_ring(inst.f, inst.dn1));
  return IdealPresentation(inst.dn1, std::move(gens));
}

int malgrange_weight(const RingSignature& sig, const Monomial& m) {
  int w = 0;
  if (sig.has_t) w += m[sig.dt_index()] - m[sig.t_index()];
  if (const int v = sig.central(Central::kSigma); v >= 0) w += m[v];
  if (const int v = sig.central(Central::kTauH); v >= 0) w -= m[v];
  return w;
}

WeylOperator homogenize_w(const WeylOperator& P, const Ring& target) {
  const int tau = target->central(Central::kTauH);
  if (tau < 0 || !target->has_t) throw InputError("homogenization needs a ring with t and tau_h");
  const WeylOperator Q = change_ring(P, target);
  if (Q.is_zero()) return Q;
  int dmin = INT_MAX;
  for (const Term& t : Q.terms()) dmin = std::min(dmin, malgrange_weight(*target, t.mono));
  std::vector<Term> terms;
  for (const Term& t : Q.terms()) {
    Term x = t;
    x.mono[tau] = static_cast<std::uint16_t>(x.mono[tau] + malgrange_weight(*target, t.mono) - dmin);
    terms.push_back(std::move(x));
  }
  return WeylOperator::from_terms(target, std::move(terms));
}

Dehomogenized psi_dehomogenize(const WeylOperator& P, const Ring& target) {
  const RingSignature& src = *P.ring();
  const int s = target->central(Central::kS);
  if (s < 0 || !src.has_t) throw InputError("psi maps a ring with (t, dt) into one with s");
  Dehomogenized out{WeylOperator(target), 0};
  if (P.is_zero()) return out;
  const int d = malgrange_weight(src, P.terms().front().mono);
  for (const Term& t : P.terms())
    if (malgrange_weight(src, t.mono) != d) throw InternalError("psi applied to a non-homogeneous operator");
  for (Central c : {Central::kSigma, Central::kTauH})
    if (const int v = src.central(c); v >= 0)
      for (const Term& t : P.terms())
        if (t.mono[v]) throw InternalError("psi applied to an operator involving sigma or tau_h");
  out.shift = d;
  for (const Term& t : P.terms()) {
    // t^i dt^(i+d) = dt^d prod_{k<i} (-s-1-d-k)   (d >= 0)
    // t^(j+nu) dt^j = t^nu prod_{k<j} (-s-1-k)     (d = -nu < 0)
    const int count = d >= 0 ? t.mono[src.t_index()] : t.mono[src.dt_index()];
    const int off = d >= 0 ? d : 0;
    UPoly poly = UPoly::constant(t.coeff);
    for (int k = 0; k < count; ++k) poly = poly * UPoly({Rational(-1 - off - k), Rational(-1)});
    Monomial base;
    for (int v = 0; v < 2 * src.n_x; ++v) base[target->find_var(src.var_name(v))] = t.mono[v];
    std::vector<Term> terms;
    for (int e = 0; e <= poly.degree(); ++e) {
      if (poly.coeff(e) == 0) continue;
      Monomial m = base;
      m[s] = static_cast<std::uint16_t>(e);
      terms.push_back({poly.coeff(e), m});
    }
    out.op += WeylOperator::from_terms(target, std::move(terms));
  }
  return out;
}

WeylOperator embed_s(const WeylOperator& P, const Ring& target) {
  const RingSignature& src = *P.ring();
  const int s = src.central(Central::kS);
  if (!target->has_t) throw InputError("embedding s needs a ring with (t, dt)");
  const WeylOperator minus_dt_t = -(WeylOperator::variable(target, target->dt_index()) *
                                    WeylOperator::variable(target, target->t_index()));
  std::vector<WeylOperator> pw{WeylOperator::constant(target, 1)};
  WeylOperator out(target);
  for (const Term& t : P.terms()) {
    const int e = s >= 0 ? t.mono[s] : 0;
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * minus_dt_t);
    Monomial m;
    for (int v = 0; v < src.num_vars(); ++v) {
      if (v == s || !t.mono[v]) continue;
      const int tv = target->find_var(src.var_name(v));
      if (tv < 0) throw InputError("generator '" + src.var_name(v) + "' missing in target ring");
      m[tv] = t.mono[v];
    }
    out += WeylOperator::monomial(target, m, t.coeff) * pw[static_cast<std::size_t>(e)];
  }
  return out;
}

IdealPresentation ann_fs(const ProblemInstance& inst, const GbOptions& options) {
  const IdealPresentation J = build_malgrange(inst);
  const Ring rst = derive_ring(inst.dn, true, {Central::kSigma, Central::kTauH});
  const int sigma = rst->central(Central::kSigma), tau = rst->central(Central::kTauH);
  std::vector<WeylOperator> gens;
  for (const auto& g : J.generators()) gens.push_back(homogenize_w(g, rst));
  gens.push_back(WeylOperator::constant(rst, 1) -
                 WeylOperator::variable(rst, sigma) * WeylOperator::variable(rst, tau));
  GbOptions opt = options;
  opt.stage = "ann-fs/eliminate-sigma-tau";
  const IdealPresentation gb =
      groebner(IdealPresentation(rst, gens), TermOrder::elimination(rst->num_vars(), {sigma, tau}), opt);
  std::vector<WeylOperator> psi;
  for (const auto& g : gb.basis()) {
    if (!g.free_of({sigma, tau})) continue;
    psi.push_back(psi_dehomogenize(change_ring(g, inst.dn1), inst.dns).op);
  }
  opt.stage = "ann-fs/basis";
  return groebner(IdealPresentation(inst.dns, std::move(psi)), TermOrder::degrevlex(inst.dns->num_vars()), opt);
}

}  // namespace holozeta
