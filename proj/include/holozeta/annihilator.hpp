#ifndef HOLOZETA_ANNIHILATOR_HPP
#define HOLOZETA_ANNIHILATOR_HPP

#include <string>
#include <vector>

#include "holozeta/groebner.hpp"

namespace holozeta {

// f in Q[x], the generators of a left ideal I of D_n annihilating u, and the
// caller's assertion that f acts injectively on D_n/I.
struct ProblemInstance {
  Ring dn;    // D_n
  Ring dns;   // D_n[s]
  Ring dn1;   // D_{n+1} = D_n<t, dt>
  WeylOperator f;
  std::vector<WeylOperator> I;
  bool saturated = true;

  // Validates: f a non-constant polynomial, I nonempty, all in dn.
  static ProblemInstance make(Ring dn, WeylOperator f, std::vector<WeylOperator> I,
                              bool saturated = true);
  static ProblemInstance parse(const std::vector<std::string>& vars, const std::string& f,
                               const std::vector<std::string>& I, bool saturated = true);

  int n() const { return dn->n_x; }
  // df/dx_i in dn
  WeylOperator partial(int i) const { return poly_derivative(f, i); }
};

// P(x, d_1 + f_1 dt, ..., d_n + f_n dt) in `target` (a ring with (t, dt)).
WeylOperator tau_substitute(const WeylOperator& P, const WeylOperator& f, const Ring& target);

// {tau(P) : P in I} together with t - f, in inst.dn1.
IdealPresentation build_malgrange(const ProblemInstance& inst);

// Weight of a word under t:-1, dt:+1, tau_h:-1, sigma:+1, all else 0.
int malgrange_weight(const RingSignature& sig, const Monomial& m);

// Multiplies each term of weight d by tau_h^(d - d_min). `target` carries
// (t, dt) and sigma, tau_h.
WeylOperator homogenize_w(const WeylOperator& P, const Ring& target);

// P == S * P'(-dt*t), where S = dt^shift for shift >= 0 and t^(-shift)
// otherwise (shift is the weight of P).
struct Dehomogenized {
  WeylOperator op;  // in D_n[s]
  int shift = 0;
};
Dehomogenized psi_dehomogenize(const WeylOperator& P, const Ring& target);

// Substitutes s -> -dt*t; `target` has (t, dt).
WeylOperator embed_s(const WeylOperator& P, const Ring& target);

// Generators (reduced degrevlex basis) of Ann_{D_n[s]}(f^s (x) u).
IdealPresentation ann_fs(const ProblemInstance& inst, const GbOptions& options = {});

}  // namespace holozeta

#endif  // HOLOZETA_ANNIHILATOR_HPP
