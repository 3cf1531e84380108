#include "holozeta/bfunction.hpp"

namespace holozeta {

namespace {

std::vector<WeylOperator> with_f(const IdealPresentation& ann, const WeylOperator& f) {
  std::vector<WeylOperator> gens = ann.best_generators();
  gens.push_back(change_ring(f, ann.ring()));
  return gens;
}

}  // namespace

BFunction bfunction(const IdealPresentation& ann, const WeylOperator& f, const GbOptions& options) {
  const Ring& R = ann.ring();
  if (R->central(Central::kS) < 0) throw InputError("b-function needs an ideal in D_n[s]");
  std::vector<int> kill;
  for (int p = 0; p < R->pairs(); ++p) {
    kill.push_back(R->coord(p));
    kill.push_back(R->deriv(p));
  }
  GbOptions opt = options;
  opt.stage = "bfun/eliminate";
  const IdealPresentation E = eliminate(IdealPresentation(R, with_f(ann, f)), kill, opt);
  const UPoly b = univariate_generator(E.basis());
  if (b.is_zero()) throw InputError("no b-function found");
  return BFunction::from(b);
}

FunctionalEquation functional_operator(const IdealPresentation& ann, const WeylOperator& f,
                                       const BFunction& b, const GbOptions& options) {
  const Ring& R = ann.ring();
  const int s = R->central(Central::kS);
  const WeylOperator zero(R);
  // component 1 carries the ideal element, component 0 the coefficient of f
  std::vector<OperatorVector> gens;
  for (const auto& g : ann.best_generators()) gens.push_back({zero, g});
  gens.push_back({WeylOperator::constant(R, 1), change_ring(f, R)});
  GbOptions opt = options;
  opt.stage = "funceq/lift";
  const TermOrder order = TermOrder::degrevlex(R->num_vars()).with_module(ModuleOrder::kPositionOverTerm);
  const SubmodulePresentation M = groebner(SubmodulePresentation(R, 2, std::move(gens)), order, opt);
  const OperatorVector rem = module_normal_form({zero, from_upoly(b.poly, R, s)}, M.basis(), R, order);
  if (!rem[1].is_zero()) throw InputError("b(s) does not lie in Ann + D_n[s] f");
  return {b, -rem[0]};
}

FunctionalEquation shift_compose(const FunctionalEquation& eqn, int m) {
  if (m < 0) throw InputError("shift count must be nonnegative");
  const Ring& R = eqn.P0.ring();
  const int s = R->central(Central::kS);
  WeylOperator P = WeylOperator::constant(R, 1);
  UPoly b = UPoly::constant(1);
  for (int j = 0; j < m; ++j) {
    P = P * shift_central(eqn.P0, s, j);
    b = b * eqn.b.poly.shift(j);
  }
  return {BFunction::from(b), P};
}

}  // namespace holozeta
