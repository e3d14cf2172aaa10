#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padrep/heights.hpp"

using namespace padrep;

namespace {

bool within_rel(const Ival& v, double target, double rel) {
    double m = v.mid_d();
    return std::abs(m - target) <= rel * std::abs(target);
}

}  // namespace

TEST_CASE("rational heights") {
    const mpfr_prec_t prec = 200;
    Ival ln10 = log(Ival::from_si(10, prec));
    CHECK((height_rational(10, 1, prec).h - ln10).contains_zero());
    Ival ln9 = log(Ival::from_si(9, prec));
    CHECK((height_rational(1, 9, prec).h - ln9).contains_zero());
    CHECK((height_rational(-1, 9, prec).h - ln9).contains_zero());
    CHECK(height_rational(1, 1, prec).h.contains_zero());
    CHECK_THROWS_AS(height_rational(2, 4, prec), DomainError);
    CHECK_THROWS_AS(height_rational(1, 0, prec), DomainError);
}

TEST_CASE("minimal-polynomial heights of alpha and a") {
    PlasticRootSystem rs = solve_plastic_cubic(PrecisionContext(100));
    BinetCoefficients bc = binet_coefficients(rs);
    const mpfr_prec_t prec = rs.ctx.bits();

    Ival h_alpha = height_from_min_poly(1, {rs.alpha, rs.beta.abs(), rs.gamma.abs()}).h;
    CHECK((h_alpha - log(rs.alpha) / 3L).contains_zero());

    Ival h_a = height_from_min_poly(23, {abs(bc.a), bc.b.abs(), bc.c.abs()}).h;
    CHECK((h_a - log(Ival::from_si(23, prec)) / 3L).contains_zero());
}

TEST_CASE("composite height bounds") {
    const mpfr_prec_t prec = 200;
    HeightValue h2{log(Ival::from_si(2, prec)), HeightProvenance::rational};
    HeightValue h3{log(Ival::from_si(3, prec)), HeightProvenance::rational};
    Ival ln2 = log(Ival::from_si(2, prec));

    Ival sum = height_bound_combine(HeightOp::sum, {h2, h3}).h;
    CHECK((sum - (h2.h + h3.h + ln2)).contains_zero());

    Ival prod = height_bound_combine(HeightOp::product, {h2, h3}).h;
    CHECK((prod - (h2.h + h3.h)).contains_zero());

    CHECK((height_bound_combine(HeightOp::power, {h3}, -4).h - h3.h * 4).contains_zero());
    CHECK(height_bound_combine(HeightOp::power, {h3}, 0).h.contains_zero());
}

TEST_CASE("explicit lower bound rejects undersized A_i") {
    const mpfr_prec_t prec = 200;
    MatveevInput inp;
    inp.t = 1;
    inp.degree = 1;
    inp.B = Ival::from_si(10, prec);
    inp.A = {Ival::from_str("0.1", prec)};
    CHECK_THROWS_AS(matveev_lower_bound(inp), DomainError);
    inp.A = {Ival::from_str("0.2", prec)};
    Ival v = matveev_lower_bound(inp);
    CHECK(v.certainly_negative());
}

TEST_CASE("bound chain constants land in the documented windows") {
    PlasticRootSystem rs = solve_plastic_cubic(PrecisionContext(100));
    BinetCoefficients bc = binet_coefficients(rs);
    BoundChain chain = case_bounds(rs, bc);

    auto in_window = [](const Ival& derived, double published) {
        double m = derived.mid_d();
        return m >= 0.5 * published && m <= 1.01 * published;
    };
    CHECK(in_window(chain.c1, chain.c1_published));
    CHECK(in_window(chain.c2, chain.c2_published));
    CHECK(in_window(chain.c3, chain.c3_published));

    // derived values track the reference computation closely
    CHECK(within_rel(chain.c1, 6.16e14, 0.01));
    CHECK(chain.c2.mid_d() <= 2e28 * 1.01);
    CHECK(chain.c3.mid_d() <= 1.94e42 * 1.01);

    // absolute bound: the certified resolution of L = 1.94e42 (log L)^3
    mpz_class lo("2000000000000000000000000000000000000000000000000");  // 2e48
    mpz_class hi("3000000000000000000000000000000000000000000000000");  // 3e48
    CHECK(chain.absolute_bound >= lo);
    CHECK(chain.absolute_bound <= hi);
    CHECK(absolute_bound(rs, bc) == chain.absolute_bound);
}

TEST_CASE("fixed-point bound: r = 1 sanity case") {
    const mpfr_prec_t prec = 200;
    Ival H = Ival::from_si(100, prec);
    GuzmanLucaBound glb = guzman_luca_bound(1, H, H);
    // lemma: 2 * 100 * log 100 ~ 921
    CHECK(glb.lemma_bound >= 920);
    CHECK(glb.lemma_bound <= 922);
    // fixed point of L = 100 log L is ~ 647; certified bound is at most the lemma's
    CHECK(glb.bound() <= glb.lemma_bound);
    CHECK(glb.fixed_point_bound >= 600);
    CHECK(glb.fixed_point_bound <= 700);
    // the certificate property itself
    Ival g = H * log(Ival::from_mpz(glb.fixed_point_bound, prec));
    CHECK(g.certainly_lt(Ival::from_mpz(glb.fixed_point_bound, prec)));
}

TEST_CASE("fixed-point bound is monotone in c") {
    const mpfr_prec_t prec = 300;
    Ival c_small = Ival::from_str("1e40", prec);
    Ival c_big = Ival::from_str("1e42", prec);
    GuzmanLucaBound a = guzman_luca_bound(3, c_small, c_small);
    GuzmanLucaBound b = guzman_luca_bound(3, c_big, c_big);
    CHECK(a.bound() < b.bound());
}
