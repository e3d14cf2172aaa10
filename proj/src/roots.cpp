#include "padrep/roots.hpp"

#include <mpfr.h>

namespace padrep {

Ival plastic_cubic(const Ival& x) { return x * x * x - x - Ival::from_si(1, x.prec()); }

Cplx plastic_cubic(const Cplx& x) {
    Ival one = Ival::from_si(1, x.re.prec());
    return x * x * x - x - one;
}

bool certify_stable(const Ival& value_at_p, const Ival& value_at_2p, const Ival& tol) {
    return abs(value_at_p - value_at_2p).certainly_lt(tol);
}

namespace {

// Newton refinement of the real root on midpoints, then a sign-change
// bracket [m - delta, m + delta] checked with interval evaluation.
Ival newton_real_root(mpfr_prec_t bits, int digits) {
    mpfr_t x, f, df, t;
    mpfr_init2(x, bits);
    mpfr_init2(f, bits);
    mpfr_init2(df, bits);
    mpfr_init2(t, bits);
    mpfr_set_d(x, 1.324717957244746, MPFR_RNDN);
    // quadratic convergence: ~log2(digits) iterations from a 15-digit seed
    int iters = 4;
    for (int d = 16; d < digits; d *= 2) ++iters;
    for (int i = 0; i < iters; ++i) {
        mpfr_sqr(t, x, MPFR_RNDN);
        mpfr_mul(f, t, x, MPFR_RNDN);
        mpfr_sub(f, f, x, MPFR_RNDN);
        mpfr_sub_ui(f, f, 1, MPFR_RNDN);      // f = x^3 - x - 1
        mpfr_mul_ui(df, t, 3, MPFR_RNDN);
        mpfr_sub_ui(df, df, 1, MPFR_RNDN);    // df = 3x^2 - 1
        mpfr_div(f, f, df, MPFR_RNDN);
        mpfr_sub(x, x, f, MPFR_RNDN);
    }
    // bracket radius 10^(-digits)
    mpfr_t delta;
    mpfr_init2(delta, 64);
    mpfr_set_ui(delta, 10, MPFR_RNDU);
    mpfr_pow_si(delta, delta, -digits, MPFR_RNDU);

    mpfr_t lo, hi;
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
    mpfr_sub(lo, x, delta, MPFR_RNDD);
    mpfr_add(hi, x, delta, MPFR_RNDU);
    Ival left = Ival::from_endpoints_copy(lo, lo, bits);
    Ival right = Ival::from_endpoints_copy(hi, hi, bits);
    Ival enclosure = Ival::from_endpoints_copy(lo, hi, bits);
    mpfr_clears(x, f, df, t, delta, lo, hi, nullptr);

    if (!(plastic_cubic(left).certainly_negative() && plastic_cubic(right).certainly_positive()))
        throw PrecisionExhausted("newton_real_root: sign-change bracket not certified");
    return enclosure;
}

}  // namespace

PlasticRootSystem solve_plastic_cubic(PrecisionContext ctx) {
    for (PrecisionContext cur = ctx;; cur = cur.escalated()) {
        const mpfr_prec_t bits = cur.bits();
        const int digits = cur.decimal_digits;

        // radical route: r1 = cbrt(108 + 12 sqrt(69)), r2 = cbrt(108 - 12 sqrt(69))
        Ival s69 = sqrt(Ival::from_si(69, bits));
        Ival r1 = cbrt(Ival::from_si(108, bits) + s69 * 12);
        Ival r2 = cbrt(Ival::from_si(108, bits) - s69 * 12);
        Ival alpha_rad = (r1 + r2) / 6;

        Cplx beta{-(r1 + r2) / 12, sqrt(Ival::from_si(3, bits)) * (r1 - r2) / 12};
        Cplx gamma = beta.conj();

        Ival tol(bits);
        {
            mpfr_t b;
            mpfr_init2(b, 64);
            mpfr_set_ui(b, 10, MPFR_RNDU);
            mpfr_pow_si(b, b, -(digits - kGuardDigits), MPFR_RNDU);
            tol = Ival::from_endpoints_copy(b, b, bits);
            mpfr_clear(b);
        }

        bool ok = true;
        Ival alpha = alpha_rad;
        try {
            Ival alpha_newton = newton_real_root(bits, digits);
            ok = ok && abs(alpha_rad - alpha_newton).certainly_lt(tol);
            if (ok) alpha = alpha_rad.intersect(alpha_newton);
        } catch (const PrecisionExhausted&) {
            ok = false;
        }

        // residuals of all three roots
        ok = ok && abs(plastic_cubic(alpha)).certainly_lt(tol);
        if (ok) {
            Cplx res = plastic_cubic(beta);
            ok = abs(res.re).certainly_lt(tol) && abs(res.im).certainly_lt(tol);
        }

        // product of roots is 1 (constant term of x^3 - x - 1 is -1)
        if (ok) {
            Cplx prod = beta * gamma * alpha;
            ok = abs(prod.re - 1).certainly_lt(tol) && abs(prod.im).certainly_lt(tol);
        }

        // numeric envelope and |beta| = alpha^(-1/2)
        if (ok) {
            Ival ab = beta.abs();
            ok = Ival::from_str("1.32", bits).certainly_lt(alpha) &&
                 alpha.certainly_lt(Ival::from_str("1.33", bits)) &&
                 Ival::from_str("0.86", bits).certainly_lt(ab) &&
                 ab.certainly_lt(Ival::from_str("0.87", bits)) &&
                 abs(ab - 1 / sqrt(alpha)).certainly_lt(tol);
        }

        ok = ok && alpha.radius_within(digits);

        if (ok) return PlasticRootSystem{alpha, beta, gamma, r1, r2, cur};
        if (!cur.can_escalate())
            throw PrecisionExhausted("solve_plastic_cubic: not certified at max_digits=" +
                                     std::to_string(cur.max_digits));
    }
}

}  // namespace padrep
