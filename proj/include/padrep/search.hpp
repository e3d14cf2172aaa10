#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "padrep/repdigit.hpp"
#include "padrep/roots.hpp"

namespace padrep {

/// One solution of P_{n1} + P_{n2} + P_{n3} = d * (10^len - 1) / 9 with
/// n1 >= n2 >= n3 >= 0, indices outside {1, 2, 4}, len >= 2.
struct Solution {
    mpz_class value;
    unsigned n1 = 0, n2 = 0, n3 = 0;
    int digit = 0;
    unsigned len = 0;

    friend bool operator==(const Solution&, const Solution&) = default;
    friend auto operator<=>(const Solution& a, const Solution& b) {
        return std::tie(a.value, a.n1, a.n2, a.n3) <=> std::tie(b.value, b.n1, b.n2, b.n3);
    }
};

struct RepresentationSet {
    std::map<mpz_class, std::vector<Solution>> by_value;
    unsigned n_max = 0;
    unsigned ell_max = 0;

    [[nodiscard]] std::vector<mpz_class> values() const;
    [[nodiscard]] size_t solution_count() const;
    friend bool operator==(const RepresentationSet& a, const RepresentationSet& b) {
        return a.by_value == b.by_value;
    }
};

/// Window of repdigit lengths compatible with a leading index n1: the union
/// of the certified log-alpha/log-10 window and the classical (n1-3)/5 ..
/// (n1+8)/5 envelope, rounded outward. Guaranteed to contain every
/// compatible length.
std::pair<long, long> ell_window(unsigned n1, const PlasticRootSystem& roots);

/// Exact exhaustive enumeration over canonical triples n1 >= n2 >= n3 with
/// the sum tested against the precomputed repdigit set (len in [2, ell_max]).
/// OpenMP-partitioned over the outer index when threads != 1.
RepresentationSet enumerate_solutions(unsigned n_max, unsigned ell_max, int threads = 0);

/// Serial reference: naive triple loop, each sum classified digit-by-digit.
/// Kept independent of the table-lookup path for testing and benchmarking.
RepresentationSet enumerate_solutions_reference(unsigned n_max, unsigned ell_max);

/// Recomputes both sides exactly and checks every Solution invariant.
bool verify_solution(const Solution& s);

}  // namespace padrep
