#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padrep/interval.hpp"
#include "padrep/roots.hpp"

using namespace padrep;

namespace {
const char* kAlpha40 = "1.3247179572447460259609088544780973407344040569";
}

TEST_CASE("interval arithmetic encloses exact rational results") {
    const mpfr_prec_t prec = 200;
    Ival a = Ival::from_si(1, prec) / 3L;
    Ival b = Ival::from_si(1, prec) / 7L;
    Ival s = a + b;  // 10/21
    Ival exact = Ival::from_si(10, prec) / 21L;
    CHECK(s.overlaps(exact));
    CHECK((s - exact).contains_zero());
    CHECK((a * b - Ival::from_si(1, prec) / 21L).contains_zero());
    CHECK((a / b - Ival::from_si(7, prec) / 3L).contains_zero());
}

TEST_CASE("division by an interval containing zero throws") {
    const mpfr_prec_t prec = 128;
    Ival z = Ival::from_si(1, prec) - Ival::from_si(1, prec);
    CHECK_THROWS_AS(Ival::from_si(1, prec) / z, DomainError);
}

TEST_CASE("elementary functions keep the true value inside") {
    const mpfr_prec_t prec = 256;
    Ival two = Ival::from_si(2, prec);
    CHECK((sqr(sqrt(two)) - two).contains_zero());
    CHECK((exp(log(two)) - two).contains_zero());
    Ival c = cbrt(Ival::from_si(8, prec));
    CHECK((c - Ival::from_si(2, prec)).contains_zero());
    CHECK((pow_si(two, 10) - Ival::from_si(1024, prec)).contains_zero());
    CHECK((pow_si(two, -3) - Ival::from_si(1, prec) / 8L).contains_zero());
}

TEST_CASE("predicates and integer views") {
    const mpfr_prec_t prec = 128;
    Ival x = Ival::from_str("2.75", prec);
    mpz_class f;
    CHECK(x.floor_unique(f));
    CHECK(f == 2);
    CHECK(x.round_mid() == 3);
    Ival d = x.dist_to_nearest_int();
    CHECK(d.contains(Ival::from_str("0.25", prec)));
    CHECK(Ival::from_si(3, prec).certainly_lt(Ival::from_si(4, prec)));
    CHECK_FALSE(Ival::from_si(4, prec).certainly_lt(Ival::from_si(4, prec)));
    CHECK(mul_mpz(x, mpz_class(4)).contains_mpz(mpz_class(11)));
}

TEST_CASE("complex rectangle arithmetic: |(1+i)^2| = 2") {
    const mpfr_prec_t prec = 200;
    Cplx z{Ival::from_si(1, prec), Ival::from_si(1, prec)};
    Cplx z2 = z * z;
    CHECK(z2.re.contains_zero());
    CHECK((z2.im - 2L).contains_zero());
    CHECK((z.abs2() - 2L).contains_zero());
    Cplx z8 = z.pow_ui(8);
    CHECK((z8.re - 16L).contains_zero());
    CHECK(z8.im.contains_zero());
}

TEST_CASE("plastic root certified at several precisions") {
    for (int digits : {50, 100, 200, 400}) {
        CAPTURE(digits);
        PlasticRootSystem rs = solve_plastic_cubic(PrecisionContext(digits));
        Ival golden = Ival::from_str(kAlpha40, rs.ctx.bits());
        CHECK(abs(rs.alpha - golden).certainly_lt(Ival::from_str("1e-45", rs.ctx.bits())));
        CHECK(plastic_cubic(rs.alpha).contains_zero());
        CHECK(rs.alpha.radius_within(digits));
        // alpha beta gamma = 1 (the cubic has constant term -1... sign: product of roots = 1)
        Cplx prod = rs.beta * rs.gamma;
        Ival p = prod.re * rs.alpha;
        CHECK((p - 1L).contains_zero());
        // |beta| = alpha^(-1/2)
        Ival lhs = rs.beta.abs();
        Ival rhs = Ival::from_si(1, rs.ctx.bits()) / sqrt(rs.alpha);
        CHECK((lhs - rhs).contains_zero());
    }
}

TEST_CASE("refinement: higher precision gives a nested tighter enclosure") {
    PlasticRootSystem lo = solve_plastic_cubic(PrecisionContext(50));
    PlasticRootSystem hi = solve_plastic_cubic(PrecisionContext(200));
    CHECK(lo.alpha.overlaps(hi.alpha));
    CHECK(hi.alpha.rad_d() < lo.alpha.rad_d());
}

TEST_CASE("certify_stable accepts agreement and rejects divergence") {
    const mpfr_prec_t prec = 128;
    Ival tol = Ival::from_str("1e-10", prec);
    Ival a = Ival::from_str("1.2345678901", prec);
    Ival b = Ival::from_str("1.23456789012", prec);
    CHECK(certify_stable(a, b, tol));
    Ival c = Ival::from_str("1.2346", prec);
    CHECK_FALSE(certify_stable(a, c, tol));
}
