#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padrep/padovan.hpp"

using namespace padrep;

TEST_CASE("first values of the sequence") {
    const long expected[] = {0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151};
    for (unsigned n = 0; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(padovan(n) == expected[n]);
    }
}

TEST_CASE("recurrence holds far out") {
    for (unsigned n : {100u, 250u, 500u, 997u})
        CHECK(padovan(n + 3) == padovan(n + 1) + padovan(n));
}

TEST_CASE("canonical_index collapses the aliases") {
    CHECK(canonical_index(1) == 3);
    CHECK(canonical_index(2) == 3);
    CHECK(canonical_index(4) == 5);
    CHECK(canonical_index(0) == 0);
    CHECK(canonical_index(3) == 3);
    CHECK(canonical_index(5) == 5);
    CHECK(canonical_index(6) == 6);
    CHECK(canonical_index(123) == 123);
}

TEST_CASE("growth envelope alpha^(n-3) <= P_n <= alpha^(n-1)") {
    PlasticRootSystem rs = solve_plastic_cubic(PrecisionContext(100));
    for (unsigned n : {5u, 10u, 50u, 100u, 300u, 1000u}) {
        CAPTURE(n);
        CHECK(growth_bounds_check(n, rs));
    }
}

TEST_CASE("Binet identity and error-term decay") {
    PlasticRootSystem rs = solve_plastic_cubic(PrecisionContext(200));
    BinetCoefficients bc = binet_coefficients(rs);
    const mpfr_prec_t prec = rs.ctx.bits();

    // classical window holds for the root-scaled constant; 3|b| < 1
    Ival a_scaled = bc.a * rs.alpha;
    CHECK(Ival::from_str("0.72", prec).certainly_lt(a_scaled));
    CHECK(a_scaled.certainly_lt(Ival::from_str("0.73", prec)));
    CHECK((bc.b.abs() * 3).certainly_lt(Ival::from_si(1, prec)));

    // minimal polynomials: 23 a^3 - 5 a - 1 = 0 and, for the scaled
    // constant, 23 x^3 - 23 x^2 + 6 x - 1 = 0
    Ival mp = bc.a * bc.a * bc.a * 23 - bc.a * 5 - 1;
    CHECK(mp.contains_zero());
    Ival mp_scaled = a_scaled * a_scaled * a_scaled * 23 - sqr(a_scaled) * 23 + a_scaled * 6 - 1;
    CHECK(mp_scaled.contains_zero());

    // Binet at n = 0 reduces to a + b + c = 0
    Cplx sum0 = bc.b + bc.c + Ival(bc.a);
    CHECK(sum0.re.contains_zero());
    CHECK(sum0.im.contains_zero());

    for (unsigned n = 1; n <= 200; n += 7) {
        CAPTURE(n);
        Ival e = error_term(n, rs, bc);
        Ival reconstructed = bc.a * pow_si(rs.alpha, static_cast<long>(n)) + e;
        CHECK(reconstructed.contains_mpz(padovan(n)));
        if (n >= 1) CHECK(abs(e).certainly_lt(pow_si(rs.alpha, -static_cast<long>(n) / 2)));
    }
    // |e(n)| < alpha^(-n/2) at odd n too, via the exact exponent -n/2 <= -(n-1)/2 - 1/2
    for (unsigned n : {1u, 3u, 9u, 33u, 101u}) {
        Ival e = error_term(n, rs, bc);
        Ival cap = Ival::from_si(1, prec) / sqrt(pow_si(rs.alpha, static_cast<long>(n)));
        CHECK(abs(e).certainly_lt(cap));
    }
}
