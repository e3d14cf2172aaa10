#pragma once

#include <gmpxx.h>

#include <vector>

#include "padrep/interval.hpp"
#include "padrep/roots.hpp"

namespace padrep {

/// Exact P_n by the recurrence P_{n+3} = P_{n+1} + P_n, P_0 = 0, P_1 = P_2 = 1.
/// Uses a memoized table; build it single-threaded (e.g. via padovan_table)
/// before concurrent reads.
const mpz_class& padovan(unsigned n);

/// Grows the shared table up to index n_max and returns a view of it.
const std::vector<mpz_class>& padovan_table(unsigned n_max);

/// Collapses the index aliases P_1 = P_2 = P_3 and P_4 = P_5: maps 1,2 -> 3
/// and 4 -> 5, identity elsewhere.
unsigned canonical_index(unsigned n);

/// Binet coefficients for P_n = a alpha^n + b beta^n + c gamma^n. a is the
/// residue (alpha+1)/((alpha-beta)(alpha-gamma)) ~ 0.5451 with minimal
/// polynomial 23x^3 - 5x - 1; the classical numeric window (0.72, 0.73)
/// belongs to the root-scaled constant alpha*a, whose minimal polynomial is
/// 23x^3 - 23x^2 + 6x - 1. Both have logarithmic height (1/3) log 23.
struct BinetCoefficients {
    Ival a;
    Cplx b;
    Cplx c;  // conj(b)
    PrecisionContext ctx;
};

/// Computes a both from (alpha+1)/((alpha-beta)(alpha-gamma)) and from the
/// closed form (alpha+1)/(3 alpha^2 - 1); the two must agree.
BinetCoefficients binet_coefficients(const PlasticRootSystem& roots);

/// e(n) = P_n - a alpha^n = b beta^n + c gamma^n, evaluated both ways and
/// cross-checked; satisfies |e(n)| < alpha^(-n/2) for n >= 1.
Ival error_term(unsigned n, const PlasticRootSystem& roots, const BinetCoefficients& coeffs);

/// Certified check of alpha^(n-3) <= P_n <= alpha^(n-1).
bool growth_bounds_check(unsigned n, const PlasticRootSystem& roots);

}  // namespace padrep
