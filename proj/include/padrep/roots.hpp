#pragma once

#include "padrep/interval.hpp"
#include "padrep/precision.hpp"

namespace padrep {

/// Certified roots of x^3 - x - 1: the plastic number alpha and the complex
/// conjugate pair beta, gamma, plus the cube-root radicals r1, r2 they are
/// built from.
struct PlasticRootSystem {
    Ival alpha;
    Cplx beta;
    Cplx gamma;  // conj(beta) by construction
    Ival r1;
    Ival r2;
    PrecisionContext ctx;
};

/// Computes the roots two ways (closed radicals and iterative refinement on
/// the cubic) and certifies their agreement, escalating precision as needed.
PlasticRootSystem solve_plastic_cubic(PrecisionContext ctx);

/// Generic precision-escalation gate: true iff |value_at_p - value_at_2p| < tol.
bool certify_stable(const Ival& value_at_p, const Ival& value_at_2p, const Ival& tol);

/// Enclosure of x^3 - x - 1.
Ival plastic_cubic(const Ival& x);
Cplx plastic_cubic(const Cplx& x);

}  // namespace padrep
