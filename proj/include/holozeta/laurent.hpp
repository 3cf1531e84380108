#ifndef HOLOZETA_LAURENT_HPP
#define HOLOZETA_LAURENT_HPP

#include "holozeta/bfunction.hpp"

namespace holozeta {

// b = c * (s - lambda0)^l with c(lambda0) != 0.
struct PoleOrder {
  int l = 0;
  UPoly c;
};
PoleOrder pole_order(const UPoly& b, const Rational& lambda0);

// Least m >= 0 with lambda0 + m > 0.
int shift_for(const Rational& lambda0);

// Taylor coefficients a_0..a_count-1 of 1/c at lambda0.
std::vector<Rational> inverse_series(const UPoly& c, const Rational& lambda0, int count);

// Q_{k,0..l+k}: Q_{kj} = T_{l+k-j} / j!, where T_i is the coefficient of
// (s - lambda0)^i in c(s)^{-1} P(s). Results live in D_n (`target`).
std::vector<WeylOperator> laurent_operators(const WeylOperator& P, const UPoly& c, const Rational& lambda0,
                                            int l, int k, const Ring& target);

// Rank k+1 submodule generated by Q^(j) = sum_i C(j,i) d_s^(j-i) Q e_(i+1).
SubmodulePresentation build_Jk(const IdealPresentation& ann, int k);

// Substitutes s = value in every entry; the result lives in `target`.
SubmodulePresentation substitute_s(const SubmodulePresentation& J, const Rational& value, const Ring& target);

struct LaurentSystem {
  IdealPresentation ann;       // Ann_{D_n[s]} f^s (x) u
  FunctionalEquation eqn;      // b0, P0
  int m = 0;
  int l = 0;
  int k = 0;
  UPoly b;                     // b0(s) ... b0(s+m-1)
  UPoly c;
  std::vector<WeylOperator> Qk;   // in D_n
  SubmodulePresentation J;        // J_{l+k} at s = lambda0 + m, in D_n
  IdealPresentation ann_w;        // reduced degrevlex basis in D_n
};

// Annihilator of the k-th Laurent coefficient of f_+^lambda phi at lambda0.
LaurentSystem ann_laurent(const ProblemInstance& inst, const Rational& lambda0, int k,
                          const GbOptions& options = {});

// Same computation reusing an already known annihilator and functional equation.
LaurentSystem ann_laurent(const ProblemInstance& inst, const IdealPresentation& ann,
                          const FunctionalEquation& eqn, const Rational& lambda0, int k,
                          const GbOptions& options = {});

}  // namespace holozeta

#endif  // HOLOZETA_LAURENT_HPP
