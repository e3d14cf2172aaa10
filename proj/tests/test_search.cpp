#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padrep/padovan.hpp"
#include "padrep/search.hpp"

using namespace padrep;

TEST_CASE("fast enumeration matches the naive reference on small ranges") {
    for (unsigned n_max : {20u, 40u, 60u}) {
        CAPTURE(n_max);
        RepresentationSet fast = enumerate_solutions(n_max, 10, 0);
        RepresentationSet ref = enumerate_solutions_reference(n_max, 10);
        CHECK(fast == ref);
        CHECK(fast.solution_count() == ref.solution_count());
    }
}

TEST_CASE("serial and parallel enumeration agree") {
    RepresentationSet par = enumerate_solutions(80, 12, 0);
    RepresentationSet ser = enumerate_solutions(80, 12, 1);
    CHECK(par == ser);
}

TEST_CASE("single-digit sums are excluded by the length floor") {
    // P_6 + P_3 + P_0 = 4: a repdigit of length 1, so not a solution
    RepresentationSet rs = enumerate_solutions(8, 10, 1);
    for (const mpz_class& v : rs.values()) CHECK(v >= 11);
}

TEST_CASE("a known representation appears: 11 = P_9 + P_6 + P_3") {
    RepresentationSet rs = enumerate_solutions(12, 2, 1);
    REQUIRE(rs.by_value.count(11) == 1);
    bool found = false;
    for (const Solution& s : rs.by_value.at(11))
        if (s.n1 == 9 && s.n2 == 6 && s.n3 == 3) found = true;
    CHECK(found);
}

TEST_CASE("verify_solution accepts valid tuples and rejects invariants") {
    Solution good{11, 9, 6, 3, 1, 2};
    CHECK(verify_solution(good));

    Solution bad_index = good;
    bad_index.n3 = 1;  // excluded alias index
    CHECK_FALSE(verify_solution(bad_index));

    Solution bad_order{11, 6, 9, 3, 1, 2};
    CHECK_FALSE(verify_solution(bad_order));

    Solution bad_value = good;
    bad_value.value = 22;
    bad_value.digit = 2;
    CHECK_FALSE(verify_solution(bad_value));
}

TEST_CASE("every enumerated solution passes verification") {
    RepresentationSet rs = enumerate_solutions(100, 15, 0);
    for (const auto& [v, sols] : rs.by_value)
        for (const Solution& s : sols) {
            CAPTURE(v.get_str());
            CHECK(verify_solution(s));
        }
}

TEST_CASE("ell_window contains every realizable length") {
    PlasticRootSystem roots = solve_plastic_cubic(PrecisionContext(50));
    auto [lo, hi] = ell_window(500, roots);
    CHECK(lo <= 60);
    CHECK(hi >= 102);
    // exact check on a concrete solution: n1 = 9 sums can reach length 2
    auto [lo9, hi9] = ell_window(9, roots);
    CHECK(lo9 <= 2);
    CHECK(hi9 >= 2);
    // windows grow with n1
    auto [lo100, hi100] = ell_window(100, roots);
    auto [lo200, hi200] = ell_window(200, roots);
    CHECK(lo100 <= lo200);
    CHECK(hi100 <= hi200);
}
