#include "padrep/heights.hpp"

namespace padrep {

HeightValue height_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
    if (q <= 0) throw DomainError("height_rational: q must be positive");
    mpz_class ap = abs(p);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ap.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw DomainError("height_rational: p/q not in lowest terms");
    mpz_class m = ap > q ? ap : q;
    if (m <= 1) return {Ival::from_si(0, prec), HeightProvenance::rational};
    return {log(Ival::from_mpz(m, prec)), HeightProvenance::rational};
}

HeightValue height_from_min_poly(unsigned long leading, const std::vector<Ival>& root_magnitudes) {
    if (root_magnitudes.empty()) throw DomainError("height_from_min_poly: no conjugates");
    const mpfr_prec_t prec = root_magnitudes.front().prec();
    const Ival one = Ival::from_si(1, prec);
    Ival sum = log(Ival::from_si(static_cast<long>(leading), prec));
    for (const Ival& m : root_magnitudes) {
        if (one.certainly_lt(m))
            sum += log(m);
        else if (!m.certainly_lt(one) && !m.certainly_le(one))
            throw PrecisionExhausted("height_from_min_poly: conjugate magnitude straddles 1");
        // |eta| certainly <= 1 contributes log max(|eta|,1) = 0
    }
    return {sum / static_cast<long>(root_magnitudes.size()), HeightProvenance::minimal_polynomial};
}

HeightValue height_bound_combine(HeightOp op, const std::vector<HeightValue>& hs, long s) {
    if (op == HeightOp::power) {
        if (hs.size() != 1) throw DomainError("height_bound_combine: power takes one height");
        if (s == 0) return {Ival::from_si(0, hs[0].h.prec()), HeightProvenance::composite_bound};
        return {hs[0].h * (s < 0 ? -s : s), HeightProvenance::composite_bound};
    }
    if (hs.empty()) throw DomainError("height_bound_combine: empty list");
    Ival total = hs[0].h;
    const Ival ln2 = log(Ival::from_si(2, hs[0].h.prec()));
    for (size_t i = 1; i < hs.size(); ++i) {
        total += hs[i].h;
        if (op == HeightOp::sum) total += ln2;
    }
    return {total, HeightProvenance::composite_bound};
}

namespace {

Ival t_pow_4p5(unsigned t, mpfr_prec_t prec) {
    return sqrt(pow_si(Ival::from_si(t, prec), 9));
}

Ival matveev_base(unsigned t, unsigned degree, mpfr_prec_t prec) {
    Ival d = Ival::from_si(degree, prec);
    return Ival::from_str("1.4", prec) * pow_si(Ival::from_si(30, prec), t + 3) *
           t_pow_4p5(t, prec) * sqr(d) * (log(d) + 1);
}

}  // namespace

Ival matveev_lower_bound(const MatveevInput& inp) {
    if (inp.t == 0 || inp.A.size() != inp.t) throw DomainError("matveev_lower_bound: bad t/A");
    const mpfr_prec_t prec = inp.B.prec();
    const Ival p16 = Ival::from_str("0.16", prec);
    for (const Ival& a : inp.A)
        if (a.certainly_lt(p16)) throw DomainError("matveev_lower_bound: A_i < 0.16");
    Ival prod = matveev_base(inp.t, inp.degree, prec) * (log(inp.B) + 1);
    for (const Ival& a : inp.A) prod *= a;
    return -prod;
}

Ival matveev_chain_coefficient(unsigned t, unsigned degree, const Ival& A1, const Ival& A3,
                               mpfr_prec_t prec) {
    // (1 + log B) majorized by 2 log B, with log B and A2 = log alpha symbolic
    return matveev_base(t, degree, prec) * 2 * A1 * A3;
}

BoundChain case_bounds(const PlasticRootSystem& roots, const BinetCoefficients& coeffs) {
    const mpfr_prec_t prec = roots.ctx.bits();
    const Ival ln_alpha = log(roots.alpha);
    const Ival ln2 = log(Ival::from_si(2, prec));
    const Ival ln3 = log(Ival::from_si(3, prec));
    const Ival ln5 = log(Ival::from_si(5, prec));
    const Ival ln10 = log(Ival::from_si(10, prec));
    const Ival ln23 = log(Ival::from_si(23, prec));
    // lower bound on log n1 under the standing assumption n1 > 500
    const Ival ln_n1 = log(Ival::from_si(501, prec));

    // validate the minimal polynomial 23x^3 - 5x - 1 of a: elementary
    // symmetric functions of (a, b, c) against (0, -5/23, 1/23)
    {
        const Ival tol = Ival::from_str("1e-30", prec);
        Cplx e1 = coeffs.b + coeffs.c + coeffs.a;
        Cplx e2 = coeffs.b * coeffs.c + (coeffs.b + coeffs.c) * coeffs.a;
        Cplx e3 = coeffs.b * coeffs.c * coeffs.a;
        bool ok = abs(e1.re * 23).certainly_lt(tol) && abs(e1.im).certainly_lt(tol) &&
                  abs(e2.re * 23 + 5).certainly_lt(tol) && abs(e2.im).certainly_lt(tol) &&
                  abs(e3.re * 23 - 1).certainly_lt(tol) && abs(e3.im).certainly_lt(tol);
        if (!ok) throw PrecisionExhausted("case_bounds: minimal polynomial of a not certified");
    }

    // h(alpha) = (1/3) log alpha; h(a) = (1/3) log 23 since every conjugate
    // of a lies inside the unit circle and the leading coefficient is 23
    Ival h_alpha = height_from_min_poly(1, {roots.alpha, roots.beta.abs(), roots.gamma.abs()}).h;
    Ival h_a = height_from_min_poly(23, {abs(coeffs.a), coeffs.b.abs(), coeffs.c.abs()}).h;

    const Ival A1 = ln10 * 3;
    BoundChain bc;

    // Case 1: A3 = 3 h(d/(9a)) <= 3 * 5 log 3 = 15 log 3
    const Ival h_eta3_1 = ln3 * 4 + h_a;  // 4 log 3 + (1/3) log 23 < 5 log 3
    if (!h_eta3_1.certainly_lt(ln3 * 5))
        throw PrecisionExhausted("case_bounds: case-1 height bound not certified");
    bc.k1 = matveev_chain_coefficient(3, 3, A1, ln3 * 15, prec);
    // |Lambda_1| < 5 alpha^(-(n1-n2)) absorbs a log 5 / log alpha term
    bc.c1 = bc.k1 + ln5 / (ln_alpha * ln_n1);
    const Ival c1_pub = Ival::from_str("6.18e14", prec);
    if (!bc.c1.certainly_lt(c1_pub * Ival::from_str("1.01", prec)))
        throw PrecisionExhausted("case_bounds: c1 exceeds the published constant");

    // Case 2: h(eta3) <= 4 log 3 + (1/3) log 23 + (n1-n2) log alpha + log 2
    const Ival h2_coeff = (ln3 * 4 + h_a + ln2) / ln_n1 + c1_pub * ln_alpha;
    bc.k2 = matveev_chain_coefficient(3, 3, A1, h2_coeff * 3, prec);
    bc.c2 = bc.k2 + ln3 / (ln_alpha * sqr(ln_n1));
    const Ival c2_pub = Ival::from_str("2e28", prec);
    if (!bc.c2.certainly_lt(c2_pub * Ival::from_str("1.01", prec)))
        throw PrecisionExhausted("case_bounds: c2 exceeds the published constant");

    // Case 3: h(eta3) <= 4 log 3 + (1/3) log 23 + ((n1-n2) + 2(n2-n3)) log alpha + 2 log 2
    const Ival h3_coeff =
        (ln3 * 4 + h_a + ln2 * 2) / sqr(ln_n1) + (c1_pub / ln_n1 + c2_pub * 2) * ln_alpha;
    bc.k3 = matveev_chain_coefficient(3, 3, A1, h3_coeff * 3, prec);
    bc.c3 = bc.k3 + ln5 / (ln_alpha * pow_si(ln_n1, 3));
    const Ival c3_pub = Ival::from_str("1.94e42", prec);
    if (!bc.c3.certainly_lt(c3_pub * Ival::from_str("1.01", prec)))
        throw PrecisionExhausted("case_bounds: c3 exceeds the published constant");

    bc.absolute_bound = guzman_luca_bound(3, c3_pub, c3_pub).bound();
    (void)h_alpha;
    return bc;
}

GuzmanLucaBound guzman_luca_bound(unsigned r, const Ival& H, const Ival& c) {
    if (r < 1) throw DomainError("guzman_luca_bound: r must be >= 1");
    const mpfr_prec_t prec = H.prec();
    Ival threshold = pow_si(Ival::from_si(4L * r * r, prec), r);
    if (!threshold.certainly_lt(H)) throw DomainError("guzman_luca_bound: H <= (4r^2)^r");

    GuzmanLucaBound out;
    Ival lemma = pow_si(Ival::from_si(2, prec), r) * H * pow_si(log(H), r);
    mpfr_get_z(out.lemma_bound.get_mpz_t(), lemma.hi(), MPFR_RNDU);

    // downward fixed-point iteration L <- c (log L)^r from the lemma bound;
    // every iterate stays above the fixed point
    Ival L = lemma;
    for (int i = 0; i < 200; ++i) {
        Ival next = c * pow_si(log(L), r);
        if (abs(next - L).certainly_lt(abs(L) * Ival::from_str("1e-12", prec))) {
            L = next;
            break;
        }
        L = next;
    }
    mpz_class cand;
    mpfr_get_z(cand.get_mpz_t(), L.hi(), MPFR_RNDU);
    // certify: c (log cand)^r < cand, so any n <= c (log n)^r satisfies n <= cand
    for (int attempt = 0; attempt < 64; ++attempt) {
        Ival g = c * pow_si(log(Ival::from_mpz(cand, prec)), r);
        if (g.certainly_lt(Ival::from_mpz(cand, prec)) && cand > 55) {
            out.fixed_point_bound = cand;
            return out;
        }
        cand += cand / 100 + 1;
    }
    throw PrecisionExhausted("guzman_luca_bound: fixed point not certified");
}

mpz_class absolute_bound(const PlasticRootSystem& roots, const BinetCoefficients& coeffs) {
    return case_bounds(roots, coeffs).absolute_bound;
}

}  // namespace padrep
