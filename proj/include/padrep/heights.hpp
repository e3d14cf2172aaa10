#pragma once

#include <gmpxx.h>

#include <vector>

#include "padrep/interval.hpp"
#include "padrep/padovan.hpp"
#include "padrep/roots.hpp"

namespace padrep {

enum class HeightProvenance { rational, minimal_polynomial, composite_bound };

/// Logarithmic (Weil) height on the natural-log scale; composite_bound
/// values are upper bounds, never claimed exact.
struct HeightValue {
    Ival h;
    HeightProvenance provenance;
};

/// h(p/q) = log max(|p|, q) for p/q in lowest terms, q > 0.
HeightValue height_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec);

/// (1/D)(log a0 + sum log max(|eta_i|, 1)) over certified conjugate
/// magnitude enclosures. Throws PrecisionExhausted if an enclosure
/// straddles 1.
HeightValue height_from_min_poly(unsigned long leading, const std::vector<Ival>& root_magnitudes);

enum class HeightOp { sum, product, power };

/// Composite upper bound: sum adds log 2 per join, product adds heights,
/// integer power multiplies by |s|.
HeightValue height_bound_combine(HeightOp op, const std::vector<HeightValue>& hs, long s = 0);

/// Inputs for the explicit linear-forms lower bound.
struct MatveevInput {
    unsigned t = 0;       // number of algebraic numbers
    unsigned degree = 1;  // field degree D
    Ival B;               // >= max |b_i|
    std::vector<Ival> A;  // A_i >= max(D h(eta_i), |log eta_i|, 0.16)
};

/// Exact right-hand side of the lower bound:
/// -1.4 * 30^(t+3) * t^4.5 * D^2 (1+log D)(1+log B) A_1...A_t.
/// Valid only when the linear form itself is nonzero.
Ival matveev_lower_bound(const MatveevInput& inp);

/// Coefficient form used by the bound chain: the same product with the
/// (1+log B) factor majorized by 2 log B and both log B and log alpha kept
/// symbolic; A2 = log alpha is excluded from the returned constant.
Ival matveev_chain_coefficient(unsigned t, unsigned degree, const Ival& A1, const Ival& A3,
                               mpfr_prec_t prec);

/// The three-case bound chain. Derived constants are computed from first
/// principles; the published constants are the paper-scale roundings the
/// chain is validated against (each derived value must not exceed its
/// published counterpart by more than 1%). Subsequent stages consume the
/// published value, which the derivation certifies as an upper bound.
struct BoundChain {
    Ival c1;               // coefficient of log n1 bounding n1 - n2
    Ival c2;               // coefficient of (log n1)^2 bounding n2 - n3
    Ival c3;               // coefficient of (log n1)^3 bounding n1
    Ival k1, k2, k3;       // raw Matveev coefficients before absorbing the A-side log terms
    double c1_published = 6.18e14;
    double c2_published = 2e28;
    double c3_published = 1.94e42;
    mpz_class absolute_bound;
};

BoundChain case_bounds(const PlasticRootSystem& roots, const BinetCoefficients& coeffs);

struct GuzmanLucaBound {
    mpz_class lemma_bound;        // 2^r H (log H)^r
    mpz_class fixed_point_bound;  // certified resolution of L = c (log L)^r
    [[nodiscard]] const mpz_class& bound() const {
        return fixed_point_bound < lemma_bound ? fixed_point_bound : lemma_bound;
    }
};

/// Lemma-style bound L < 2^r H (log H)^r plus the sharper certified fixed
/// point of L = c (log L)^r. Requires H > (4 r^2)^r.
GuzmanLucaBound guzman_luca_bound(unsigned r, const Ival& H, const Ival& c);

/// Composes case_bounds and guzman_luca_bound into the absolute bound on n1.
mpz_class absolute_bound(const PlasticRootSystem& roots, const BinetCoefficients& coeffs);

}  // namespace padrep
