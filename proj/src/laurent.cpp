#include "holozeta/laurent.hpp"

namespace holozeta {

PoleOrder pole_order(const UPoly& b, const Rational& lambda0) {
  PoleOrder r;
  r.l = root_multiplicity(b, lambda0);
  r.c = b;
  for (int i = 0; i < r.l; ++i) r.c = exact_quotient(r.c, UPoly::linear(lambda0));
  return r;
}

int shift_for(const Rational& lambda0) {
  const Integer m = floor(Rational(-lambda0)) + 1;
  return m > 0 ? static_cast<int>(m.get_si()) : 0;
}

std::vector<Rational> inverse_series(const UPoly& c, const Rational& lambda0, int count) {
  const UPoly cs = c.shift(lambda0);
  if (cs.coeff(0) == 0) throw InputError("c vanishes at lambda0");
  std::vector<Rational> g(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (int i = 1; i <= n; ++i) acc -= cs.coeff(i) * g[static_cast<std::size_t>(n - i)];
    g[static_cast<std::size_t>(n)] = acc / cs.coeff(0);
  }
  return g;
}

std::vector<WeylOperator> laurent_operators(const WeylOperator& P, const UPoly& c, const Rational& lambda0,
                                            int l, int k, const Ring& target) {
  if (l + k < 0) throw InputError("k must be at least -l");
  const Ring& R = P.ring();
  const int s = R->central(Central::kS);
  const int top = l + k;
  // P(lambda0 + u) = sum_e P_e u^e
  const WeylOperator shifted = shift_central(P, s, lambda0);
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(top + 1));
  for (const Term& t : shifted.terms()) {
    const int e = t.mono[s];
    if (e > top) continue;
    Term x = t;
    x.mono[s] = 0;
    parts[static_cast<std::size_t>(e)].push_back(std::move(x));
  }
  std::vector<WeylOperator> Pe;
  for (auto& p : parts) Pe.push_back(change_ring(WeylOperator::from_terms(R, std::move(p)), target));
  const std::vector<Rational> g = inverse_series(c, lambda0, top + 1);
  std::vector<WeylOperator> Q;
  Rational fact = 1;
  for (int j = 0; j <= top; ++j) {
    if (j > 0) fact *= j;
    const int n = top - j;
    WeylOperator T(target);
    for (int e = 0; e <= n; ++e) T += Pe[static_cast<std::size_t>(e)] * g[static_cast<std::size_t>(n - e)];
    Q.push_back(T * Rational(1 / fact));
  }
  return Q;
}

SubmodulePresentation build_Jk(const IdealPresentation& ann, int k) {
  if (k < 0) throw InputError("J_k needs k >= 0");
  const Ring& R = ann.ring();
  const int s = R->central(Central::kS);
  std::vector<OperatorVector> gens;
  for (const auto& Q : ann.best_generators()) {
    std::vector<WeylOperator> derivs{Q};
    for (int j = 1; j <= k; ++j) derivs.push_back(central_derivative(derivs.back(), s));
    for (int j = 0; j <= k; ++j) {
      OperatorVector v(static_cast<std::size_t>(k + 1), WeylOperator(R));
      for (int i = 0; i <= j; ++i) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
        v[static_cast<std::size_t>(i)] = derivs[static_cast<std::size_t>(j - i)] * Rational(binom);
      }
      gens.push_back(std::move(v));
    }
  }
  return SubmodulePresentation(R, k + 1, std::move(gens));
}

SubmodulePresentation substitute_s(const SubmodulePresentation& J, const Rational& value, const Ring& target) {
  const int s = J.ring()->central(Central::kS);
  std::vector<OperatorVector> gens;
  for (const auto& v : J.generators()) {
    OperatorVector w;
    for (const auto& e : v) w.push_back(substitute_central(e, s, value, target));
    gens.push_back(std::move(w));
  }
  return SubmodulePresentation(target, J.rank(), std::move(gens));
}

LaurentSystem ann_laurent(const ProblemInstance& inst, const Rational& lambda0, int k, const GbOptions& options) {
  const IdealPresentation ann = ann_fs(inst, options);
  const BFunction b0 = bfunction(ann, inst.f, options);
  const FunctionalEquation eqn = functional_operator(ann, inst.f, b0, options);
  return ann_laurent(inst, ann, eqn, lambda0, k, options);
}

LaurentSystem ann_laurent(const ProblemInstance& inst, const IdealPresentation& ann,
                          const FunctionalEquation& eqn, const Rational& lambda0, int k,
                          const GbOptions& options) {
  LaurentSystem out;
  out.ann = ann;
  out.eqn = eqn;
  out.m = shift_for(lambda0);
  out.k = k;
  const FunctionalEquation composed = shift_compose(eqn, out.m);
  out.b = composed.b.poly;
  const PoleOrder po = pole_order(out.b, lambda0);
  out.l = po.l;
  out.c = po.c;
  if (k < -out.l)
    throw InputError("k = " + std::to_string(k) + " is below the pole order bound -" + std::to_string(out.l));
  out.Qk = laurent_operators(composed.P0, out.c, lambda0, out.l, k, inst.dn);
  out.J = substitute_s(build_Jk(ann, out.l + k), lambda0 + out.m, inst.dn);
  GbOptions opt = options;
  opt.stage = "laurent/colon";
  const IdealPresentation kernel =
      colon_kernel(out.Qk, out.J, TermOrder::degrevlex(inst.dn->num_vars()), opt);
  opt.stage = "laurent/basis";
  out.ann_w = groebner(IdealPresentation(inst.dn, kernel.basis()), TermOrder::degrevlex(inst.dn->num_vars()), opt);
  return out;
}

}  // namespace holozeta
