#include "padrep/search.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "padrep/padovan.hpp"

namespace padrep {

std::vector<mpz_class> RepresentationSet::values() const {
    std::vector<mpz_class> v;
    v.reserve(by_value.size());
    for (const auto& [n, _] : by_value) v.push_back(n);
    return v;
}

size_t RepresentationSet::solution_count() const {
    size_t c = 0;
    for (const auto& [_, sols] : by_value) c += sols.size();
    return c;
}

std::pair<long, long> ell_window(unsigned n1, const PlasticRootSystem& roots) {
    if (n1 < 1) throw DomainError("ell_window: n1 must be >= 1");
    const mpfr_prec_t bits = roots.ctx.bits();
    // ratio = log(alpha)/log(10) = 0.122123...
    Ival ratio = log(roots.alpha) / log(Ival::from_si(10, bits));
    Ival lo_sound = ratio * (static_cast<long>(n1) - 3);
    Ival hi_sound = ratio * (static_cast<long>(n1) + 3) + 1;

    long lo = static_cast<long>(std::floor(mpfr_get_d(lo_sound.lo(), MPFR_RNDD)));
    long hi = static_cast<long>(std::ceil(mpfr_get_d(hi_sound.hi(), MPFR_RNDU)));
    // widen to the (n1-3)/5 .. (n1+8)/5 envelope
    long lo_env = (static_cast<long>(n1) - 3) / 5 - ((static_cast<long>(n1) - 3) % 5 < 0 ? 1 : 0);
    long hi_env = (static_cast<long>(n1) + 8 + 4) / 5;
    return {std::min(lo, lo_env), std::max(hi, hi_env)};
}

namespace {

std::vector<unsigned> canonical_indices(unsigned n_max) {
    std::vector<unsigned> idx;
    idx.push_back(0);
    if (n_max >= 3) idx.push_back(3);
    for (unsigned n = 5; n <= n_max; ++n) idx.push_back(n);
    return idx;
}

// repdigit values indexed by a 64-bit fingerprint of the low limb
struct RepdigitLookup {
    std::unordered_map<unsigned long, std::vector<Repdigit>> buckets;

    void insert(Repdigit r) {
        unsigned long key = mpz_getlimbn(r.value.get_mpz_t(), 0);
        buckets[key].push_back(std::move(r));
    }

    const Repdigit* find(const mpz_class& v) const {
        unsigned long key = mpz_getlimbn(v.get_mpz_t(), 0);
        auto it = buckets.find(key);
        if (it == buckets.end()) return nullptr;
        for (const Repdigit& r : it->second)
            if (r.value == v) return &r;
        return nullptr;
    }
};

RepdigitLookup build_repdigit_lookup(const mpz_class& limit, unsigned ell_max) {
    RepdigitLookup lk;
    for (unsigned len = 2; len <= ell_max; ++len) {
        bool any = false;
        for (int d = 1; d <= 9; ++d) {
            Repdigit r = make_repdigit(d, len);
            if (r.value > limit) break;
            lk.insert(std::move(r));
            any = true;
        }
        if (!any) break;
    }
    return lk;
}

}  // namespace

RepresentationSet enumerate_solutions(unsigned n_max, unsigned ell_max, int threads) {
    if (n_max < 5) throw DomainError("enumerate_solutions: n_max must be >= 5");
    if (ell_max < 2) throw DomainError("enumerate_solutions: ell_max must be >= 2");

    const std::vector<mpz_class>& table = padovan_table(n_max);
    const std::vector<unsigned> idx = canonical_indices(n_max);
    const mpz_class limit = 3 * table[n_max];
    const RepdigitLookup lookup = build_repdigit_lookup(limit, ell_max);

    const int m = static_cast<int>(idx.size());
    std::vector<std::vector<Solution>> partial;

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
        partial.resize(static_cast<size_t>(omp_get_num_threads()));
        std::vector<Solution>& mine = partial[static_cast<size_t>(omp_get_thread_num())];
        mpz_class pair_sum, sum;
#pragma omp for schedule(dynamic, 4)
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j <= i; ++j) {
                pair_sum = table[idx[i]] + table[idx[j]];
                for (int k = 0; k <= j; ++k) {
                    sum = pair_sum + table[idx[k]];
                    if (const Repdigit* r = lookup.find(sum))
                        mine.push_back({sum, idx[i], idx[j], idx[k], r->digit, r->len});
                }
            }
        }
    }
#else
    {
        partial.resize(1);
        std::vector<Solution>& mine = partial[0];
        mpz_class pair_sum, sum;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j <= i; ++j) {
                pair_sum = table[idx[i]] + table[idx[j]];
                for (int k = 0; k <= j; ++k) {
                    sum = pair_sum + table[idx[k]];
                    if (const Repdigit* r = lookup.find(sum))
                        mine.push_back({sum, idx[i], idx[j], idx[k], r->digit, r->len});
                }
            }
        }
    }
#endif

    RepresentationSet out;
    out.n_max = n_max;
    out.ell_max = ell_max;
    for (auto& chunk : partial)
        for (Solution& s : chunk) out.by_value[s.value].push_back(std::move(s));
    for (auto& [_, sols] : out.by_value) std::sort(sols.begin(), sols.end());
    return out;
}

RepresentationSet enumerate_solutions_reference(unsigned n_max, unsigned ell_max) {
    if (n_max < 5) throw DomainError("enumerate_solutions_reference: n_max must be >= 5");
    if (ell_max < 2) throw DomainError("enumerate_solutions_reference: ell_max must be >= 2");
    const std::vector<mpz_class>& table = padovan_table(n_max);
    const std::vector<unsigned> idx = canonical_indices(n_max);

    RepresentationSet out;
    out.n_max = n_max;
    out.ell_max = ell_max;
    for (unsigned a : idx)
        for (unsigned b : idx) {
            if (b > a) continue;
            for (unsigned c : idx) {
                if (c > b) continue;
                mpz_class sum = table[a] + table[b] + table[c];
                auto r = classify_repdigit(sum);
                if (r && r->len >= 2 && r->len <= ell_max)
                    out.by_value[sum].push_back({sum, a, b, c, r->digit, r->len});
            }
        }
    for (auto& [_, sols] : out.by_value) std::sort(sols.begin(), sols.end());
    return out;
}

bool verify_solution(const Solution& s) {
    if (s.n1 < s.n2 || s.n2 < s.n3) return false;
    for (unsigned n : {s.n1, s.n2, s.n3})
        if (n == 1 || n == 2 || n == 4) return false;
    if (s.digit < 1 || s.digit > 9 || s.len < 2) return false;
    mpz_class sum = padovan(s.n1) + padovan(s.n2) + padovan(s.n3);
    if (sum != s.value) return false;
    return make_repdigit(s.digit, s.len).value == s.value;
}

}  // namespace padrep
