#ifndef HOLOZETA_BFUNCTION_HPP
#define HOLOZETA_BFUNCTION_HPP

#include "holozeta/annihilator.hpp"

namespace holozeta {

// b(s) f^s (x) u = P0(s) f^(s+1) (x) u.
struct FunctionalEquation {
  BFunction b;
  WeylOperator P0;  // in D_n[s]
};

// Monic generator of Q[s] intersected with Ann + D_n[s] f.
BFunction bfunction(const IdealPresentation& ann, const WeylOperator& f, const GbOptions& options = {});

// P0 with b - P0 f in ann, read off a module basis that records the
// coefficient of f. Throws InputError if b is not in Ann + D_n[s] f.
FunctionalEquation functional_operator(const IdealPresentation& ann, const WeylOperator& f,
                                       const BFunction& b, const GbOptions& options = {});

// P0(s) P0(s+1) ... P0(s+m-1) and b(s) ... b(s+m-1).
FunctionalEquation shift_compose(const FunctionalEquation& eqn, int m);

}  // namespace holozeta

#endif  // HOLOZETA_BFUNCTION_HPP
