#include "padrep/padovan.hpp"

#include <mutex>

namespace padrep {

namespace {

std::vector<mpz_class>& table_storage() {
    static std::vector<mpz_class> table = {0, 1, 1, 1};
    return table;
}

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

Ival tol_for(const PrecisionContext& ctx, mpfr_prec_t bits) {
    mpfr_t b;
    mpfr_init2(b, 64);
    mpfr_set_ui(b, 10, MPFR_RNDU);
    mpfr_pow_si(b, b, -(ctx.decimal_digits - kGuardDigits), MPFR_RNDU);
    Ival t = Ival::from_endpoints_copy(b, b, bits);
    mpfr_clear(b);
    return t;
}

}  // namespace

const std::vector<mpz_class>& padovan_table(unsigned n_max) {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto& t = table_storage();
    while (t.size() <= n_max) {
        size_t n = t.size();
        t.push_back(t[n - 2] + t[n - 3]);
    }
    return t;
}

const mpz_class& padovan(unsigned n) { return padovan_table(n)[n]; }

unsigned canonical_index(unsigned n) {
    if (n == 1 || n == 2) return 3;
    if (n == 4) return 5;
    return n;
}

BinetCoefficients binet_coefficients(const PlasticRootSystem& roots) {
    const mpfr_prec_t bits = roots.ctx.bits();
    const Ival tol = tol_for(roots.ctx, bits);
    const Ival& alpha = roots.alpha;
    const Cplx& beta = roots.beta;
    const Cplx& gamma = roots.gamma;

    // a = (alpha+1)/((alpha-beta)(alpha-gamma)), real up to the enclosure
    Cplx a_formula = (Cplx{alpha + 1, Ival::from_si(0, bits)}) /
                     ((Cplx{alpha, Ival::from_si(0, bits)} - beta) *
                      (Cplx{alpha, Ival::from_si(0, bits)} - gamma));
    if (!a_formula.im.contains_zero())
        throw PrecisionExhausted("binet_coefficients: a has non-real enclosure");

    // (alpha-beta)(alpha-gamma) = 3 alpha^2 - 1, the derivative of the cubic
    Ival a_closed = (alpha + 1) / (sqr(alpha) * 3 - 1);
    if (!abs(a_formula.re - a_closed).certainly_lt(tol))
        throw PrecisionExhausted("binet_coefficients: a routes disagree");
    Ival a = a_formula.re.intersect(a_closed);

    Cplx b = (beta + Ival::from_si(1, bits)) /
             ((beta - Cplx{alpha, Ival::from_si(0, bits)}) * (beta - gamma));
    Cplx c = b.conj();

    // envelope: the root-scaled constants alpha*a and beta*b are the ones the
    // classical estimates 0.72 < alpha*a < 0.73 and 0.24 < |beta b| < 0.25
    // describe (alpha*a is the value with minimal polynomial 23x^3-23x^2+6x-1)
    Ival a_scaled = a * alpha;
    Ival babs = b.abs() * beta.abs();
    bool ok = Ival::from_str("0.72", bits).certainly_lt(a_scaled) &&
              a_scaled.certainly_lt(Ival::from_str("0.73", bits)) &&
              Ival::from_str("0.24", bits).certainly_lt(babs) &&
              babs.certainly_lt(Ival::from_str("0.25", bits));
    // a + b + c = P_0 = 0 and a alpha + b beta + c gamma = P_1 = 1
    Cplx s0 = b + c + Ival(a);
    Cplx s1 = b * beta + c * gamma + Cplx{a * alpha, Ival::from_si(0, bits)};
    ok = ok && abs(s0.re).certainly_lt(tol) && abs(s0.im).certainly_lt(tol) &&
         abs(s1.re - 1).certainly_lt(tol) && abs(s1.im).certainly_lt(tol);
    if (!ok) throw PrecisionExhausted("binet_coefficients: invariants not certified");

    return BinetCoefficients{a, b, c, roots.ctx};
}

Ival error_term(unsigned n, const PlasticRootSystem& roots, const BinetCoefficients& coeffs) {
    if (n < 1) throw DomainError("error_term: n must be >= 1");
    const mpfr_prec_t bits = roots.ctx.bits();
    const Ival tol = tol_for(roots.ctx, bits);

    // complex-pair route: b beta^n + c gamma^n = 2 Re(b beta^n)
    Cplx t = coeffs.b * roots.beta.pow_ui(n);
    Ival e_pair = t.re * 2;

    // exact-minus-dominant route: P_n - a alpha^n
    Ival alpha_n = pow_si(roots.alpha, n);
    Ival e_exact = Ival::from_mpz(padovan(n), bits) - coeffs.a * alpha_n;

    // the subtraction cancels ~n log alpha digits, so the agreement tolerance
    // scales with the magnitude of the cancelled term
    if (!abs(e_pair - e_exact).certainly_lt(tol * (alpha_n + 1)))
        throw PrecisionExhausted("error_term: evaluation routes disagree at n=" + std::to_string(n));
    return e_pair.intersect(e_exact);
}

bool growth_bounds_check(unsigned n, const PlasticRootSystem& roots) {
    if (n < 1) throw DomainError("growth_bounds_check: n must be >= 1");
    const mpfr_prec_t bits = roots.ctx.bits();
    Ival p = Ival::from_mpz(padovan(n), bits);
    Ival lo = pow_si(roots.alpha, static_cast<long>(n) - 3);
    Ival hi = pow_si(roots.alpha, static_cast<long>(n) - 1);
    if (lo.certainly_le(p) && p.certainly_le(hi)) return true;
    if (p.certainly_lt(lo) || hi.certainly_lt(p)) return false;
    throw PrecisionExhausted("growth_bounds_check: comparison straddles the radius at n=" +
                             std::to_string(n));
}

}  // namespace padrep
