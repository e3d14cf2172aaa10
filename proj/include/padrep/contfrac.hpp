#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "padrep/interval.hpp"
#include "padrep/precision.hpp"

namespace padrep {

/// Certified partial quotients a_0..a_N and exact convergents p_k/q_k.
struct ContinuedFractionExpansion {
    std::vector<mpz_class> partial_quotients;
    std::vector<mpz_class> p;  // numerators
    std::vector<mpz_class> q;  // denominators
    int certified_depth = -1;  // N

    [[nodiscard]] size_t size() const { return partial_quotients.size(); }
};

/// Re-evaluates the target at a requested decimal precision. Expansion
/// escalates through this when a quotient's floor is radius-ambiguous.
using CertifiedValueFn = std::function<Ival(int decimal_digits)>;

/// Gauss-map expansion with interval certification: a quotient is emitted
/// only when its floor is unambiguous, and the full quotient sequence must
/// reproduce identically at doubled precision.
ContinuedFractionExpansion expand(const CertifiedValueFn& value, int depth, PrecisionContext ctx);

/// Smallest k with q_k > threshold.
int first_convergent_exceeding(const ContinuedFractionExpansion& cf, const mpz_class& threshold);

/// a(M) = max{a_i : i <= N} for the first N with q_N > M; the Legendre-type
/// gap |tau - r/s| > 1/((a(M)+2) s^2) then holds for all 0 < s < M.
struct LegendreBound {
    mpz_class M;
    int N_index = 0;
    mpz_class aM;
};

LegendreBound legendre_irrationality_bound(const ContinuedFractionExpansion& cf,
                                           const mpz_class& M);

/// Homogeneous (integer-mu) reduction branch: from |tau - r/s| < C/(B^w s)
/// with s < M, either w < w_min (the smallest w making the right side
/// certainly below 1/(2 s^2)) or r/s is a convergent and the Legendre gap
/// forces B^w < (a(M)+2) C M. The overall bound is the max of both branches.
struct HomogeneousReduction {
    long w_min = 0;       // branch applies for w >= w_min
    long lemma_bound = 0; // bound from the Legendre gap
    [[nodiscard]] long bound() const { return std::max(w_min - 1, lemma_bound); }
};

HomogeneousReduction homogeneous_reduce(const ContinuedFractionExpansion& cf, const mpz_class& M,
                                        const Ival& C, const Ival& log_base);

}  // namespace padrep
