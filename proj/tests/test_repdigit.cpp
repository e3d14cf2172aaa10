#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padrep/repdigit.hpp"

using namespace padrep;

TEST_CASE("construction") {
    CHECK(make_repdigit(7, 4).value == 7777);
    CHECK(make_repdigit(1, 1).value == 1);
    CHECK(make_repdigit(9, 10).value == mpz_class("9999999999"));
    CHECK_THROWS_AS(make_repdigit(0, 3), DomainError);
    CHECK_THROWS_AS(make_repdigit(10, 3), DomainError);
    CHECK_THROWS_AS(make_repdigit(3, 0), DomainError);
}

TEST_CASE("classification agrees with construction for all digits and lengths to 200") {
    for (int d = 1; d <= 9; ++d)
        for (unsigned len = 1; len <= 200; ++len) {
            Repdigit r = make_repdigit(d, len);
            auto c = classify_repdigit(r.value);
            REQUIRE(c.has_value());
            CHECK(c->digit == d);
            CHECK(c->len == len);
            CHECK(c->value == r.value);
        }
}

TEST_CASE("non-repdigits are rejected") {
    for (long v : {0L, 10L, 12L, 100L, 101L, 110L, 211L, 1112L, 98765L})
        CHECK_FALSE(classify_repdigit(mpz_class(v)).has_value());
    CHECK_FALSE(classify_repdigit(mpz_class("11111111111111111111112")).has_value());
    CHECK_FALSE(classify_repdigit(mpz_class(-11)).has_value());
    CHECK(classify_repdigit(mpz_class(5)).has_value());
}
