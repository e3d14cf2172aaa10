// Compares the OpenMP kernels against their serial references: the triple
// search and a stage-3 reduction subsweep. Results must agree exactly; the
// timings show what the parallel partitioning buys on this machine.

#include <chrono>
#include <cstdio>
#include <string>

#include "padrep/reduction.hpp"
#include "padrep/search.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    unsigned n_max = argc > 1 ? std::stoul(argv[1]) : 300;
    long k_max = argc > 2 ? std::stol(argv[2]) : 120;
    int digits = argc > 3 ? std::stoi(argv[3]) : 120;

    std::printf("search: n_max = %u, l_max = 100\n", n_max);
    auto t0 = std::chrono::steady_clock::now();
    padrep::RepresentationSet par = padrep::enumerate_solutions(n_max, 100, 0);
    double t_par = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    padrep::RepresentationSet ser = padrep::enumerate_solutions(n_max, 100, 1);
    double t_ser = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    padrep::RepresentationSet ref = padrep::enumerate_solutions_reference(n_max, 100);
    double t_ref = seconds_since(t0);
    std::printf("  parallel  %8.3fs  (%zu solutions)\n", t_par, par.solution_count());
    std::printf("  serial    %8.3fs  (%zu solutions)\n", t_ser, ser.solution_count());
    std::printf("  reference %8.3fs  (%zu solutions)\n", t_ref, ref.solution_count());
    if (!(par == ser && ser == ref)) {
        std::printf("  MISMATCH between implementations\n");
        return 1;
    }

    std::printf("stage-3 subsweep: k_max = %ld, %d digits\n", k_max, digits);
    padrep::PrecisionContext ctx(digits);
    mpz_class M("1000000000000000000000000000000");  // 10^30 keeps the subsweep honest
    padrep::ReductionContext rc = padrep::make_reduction_context(ctx, M);
    t0 = std::chrono::steady_clock::now();
    padrep::StageOutcome s_par = padrep::stage3(rc, k_max, k_max, true);
    double t3_par = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    padrep::StageOutcome s_ser = padrep::stage3(rc, k_max, k_max, false);
    double t3_ser = seconds_since(t0);
    std::printf("  parallel  %8.3fs  (bound %ld)\n", t3_par, s_par.bound);
    std::printf("  serial    %8.3fs  (bound %ld)\n", t3_ser, s_ser.bound);
    if (s_par.bound != s_ser.bound || s_par.reported_bound != s_ser.reported_bound) {
        std::printf("  MISMATCH between implementations\n");
        return 1;
    }
    std::printf("ok\n");
    return 0;
}
