#include "padrep/contfrac.hpp"

#include <algorithm>

namespace padrep {

namespace {

// Quotients while the interval floor stays unambiguous; stops early otherwise.
std::vector<mpz_class> expand_raw(const CertifiedValueFn& value, int depth, int digits) {
    std::vector<mpz_class> quots;
    Ival x = value(digits);
    for (int k = 0; k < depth; ++k) {
        mpz_class a;
        if (!x.floor_unique(a)) break;
        quots.push_back(a);
        Ival frac = x - Ival::from_mpz(a, x.prec());
        if (!frac.certainly_positive()) break;  // fractional part ambiguous at zero
        x = 1L / frac;
    }
    return quots;
}

}  // namespace

ContinuedFractionExpansion expand(const CertifiedValueFn& value, int depth, PrecisionContext ctx) {
    if (depth < 1) throw DomainError("expand: depth must be >= 1");
    for (PrecisionContext cur = ctx;; cur = cur.escalated()) {
        std::vector<mpz_class> quots = expand_raw(value, depth, cur.decimal_digits);
        if (static_cast<int>(quots.size()) >= depth) {
            // certify by full reproduction at doubled precision
            std::vector<mpz_class> check = expand_raw(value, depth, cur.decimal_digits * 2);
            if (std::equal(quots.begin(), quots.end(), check.begin(),
                           check.begin() + std::min(check.size(), quots.size()))) {
                ContinuedFractionExpansion cf;
                cf.partial_quotients = std::move(quots);
                mpz_class pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
                for (size_t k = 0; k < cf.partial_quotients.size(); ++k) {
                    const mpz_class& a = cf.partial_quotients[k];
                    if (k > 0 && a < 1) throw DomainError("expand: non-positive partial quotient");
                    mpz_class pk = a * pm1 + pm2;
                    mpz_class qk = a * qm1 + qm2;
                    // determinant law p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1), exact
                    mpz_class det = pk * qm1 - pm1 * qk;
                    if (det != ((k % 2 == 0) ? -1 : 1))
                        throw DomainError("expand: determinant law violated");
                    if (k >= 2 && qk <= qm1) throw DomainError("expand: q_k not increasing");
                    cf.p.push_back(pk);
                    cf.q.push_back(qk);
                    pm2 = pm1; pm1 = pk;
                    qm2 = qm1; qm1 = qk;
                }
                cf.certified_depth = static_cast<int>(cf.partial_quotients.size()) - 1;
                return cf;
            }
        }
        if (!cur.can_escalate())
            throw PrecisionExhausted("expand: depth " + std::to_string(depth) +
                                     " not certified at max_digits");
    }
}

int first_convergent_exceeding(const ContinuedFractionExpansion& cf, const mpz_class& threshold) {
    for (size_t k = 0; k < cf.q.size(); ++k)
        if (cf.q[k] > threshold) return static_cast<int>(k);
    throw DepthExhausted("first_convergent_exceeding: no q_k beyond threshold within depth");
}

LegendreBound legendre_irrationality_bound(const ContinuedFractionExpansion& cf,
                                           const mpz_class& M) {
    int n = first_convergent_exceeding(cf, M);
    LegendreBound out;
    out.M = M;
    out.N_index = n;
    out.aM = 0;
    for (int i = 0; i <= n; ++i) out.aM = std::max(out.aM, cf.partial_quotients[i]);
    return out;
}

HomogeneousReduction homogeneous_reduce(const ContinuedFractionExpansion& cf, const mpz_class& M,
                                        const Ival& C, const Ival& log_base) {
    if (!C.certainly_positive()) {
        if (C.contains_zero() && !C.certainly_positive() && !C.certainly_negative() &&
            mpfr_zero_p(C.hi()) && mpfr_zero_p(C.lo()))
            return {};  // degenerate C = 0
        if (C.certainly_negative()) throw DomainError("homogeneous_reduce: C < 0");
        return {};
    }
    const mpfr_prec_t prec = C.prec();
    LegendreBound lb = legendre_irrationality_bound(cf, M);
    const Ival m = Ival::from_mpz(M, prec);

    HomogeneousReduction out;
    // branch applies once C/(B^w s) < 1/(2 s^2) for every s < M, i.e. B^w > 2 C M
    Ival wmin = log(C * m * 2) / log_base;
    out.w_min = static_cast<long>(mpfr_get_si(wmin.hi(), MPFR_RNDU)) + 1;
    // Legendre gap: 1/((a(M)+2) s^2) < C/(B^w s) forces B^w < (a(M)+2) C M
    Ival wmax = log(Ival::from_mpz(lb.aM + 2, prec) * C * m) / log_base;
    out.lemma_bound = static_cast<long>(mpfr_get_si(wmax.hi(), MPFR_RNDD));
    return out;
}

}  // namespace padrep
