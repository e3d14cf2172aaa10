#include "padrep/reduction.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padrep {

namespace {

Ival point_lo(const Ival& x) {
    return Ival::from_endpoints_copy(x.lo(), x.lo(), x.prec());
}

Ival tol_for(const PrecisionContext& ctx, mpfr_prec_t bits) {
    mpfr_t b;
    mpfr_init2(b, 64);
    mpfr_set_ui(b, 10, MPFR_RNDU);
    mpfr_pow_si(b, b, -(ctx.decimal_digits - kGuardDigits), MPFR_RNDU);
    Ival t = Ival::from_endpoints_copy(b, b, bits);
    mpfr_clear(b);
    return t;
}

// A-coefficient for the Lemma instance: ceil(gamma_const / log alpha),
// checked against the constant the derivation absorbed it into.
long a_coefficient(long gamma_const, const Ival& log_alpha, long published) {
    Ival v = Ival::from_si(gamma_const, log_alpha.prec()) / log_alpha;
    long c = mpfr_get_si(v.hi(), MPFR_RNDU);
    if (!v.certainly_lt(Ival::from_si(c, log_alpha.prec())))
        c += 1;  // hi landed on an integer; round fully up
    if (c > published)
        throw PrecisionExhausted("a_coefficient: recomputed A exceeds the published constant");
    return published;
}

}  // namespace

DavenportEngine::DavenportEngine(const ContinuedFractionExpansion& cf, const Ival& tau,
                                 const mpz_class& M, int q_index)
    : q_(cf.q.at(static_cast<size_t>(q_index))), q_index_(q_index) {
    Ival tq = mul_mpz(tau, q_);
    m_tau_q_norm_ = mul_mpz(tq.dist_to_nearest_int(), M);
    log_q_ = log(Ival::from_mpz(q_, tau.prec()));
}

Ival DavenportEngine::epsilon(const Ival& mu) const {
    return mul_mpz(mu, q_).dist_to_nearest_int() - m_tau_q_norm_;
}

long DavenportEngine::w_bound(const Ival& A, const Ival& log_B, const Ival& eps) const {
    if (!eps.certainly_positive())
        throw DomainError("DavenportEngine::w_bound: epsilon not certainly positive");
    Ival threshold = (log(A) + log_q_ - log(point_lo(eps))) / log_B;
    // no solution has w >= threshold, so w <= floor of its upper end
    return mpfr_get_si(threshold.hi(), MPFR_RNDD);
}

ReductionOutcome davenport_reduce(const ReductionProblem& p, const ContinuedFractionExpansion& cf,
                                  int max_escalations) {
    if (!p.A.certainly_positive()) throw DomainError("davenport_reduce: A must be positive");
    if (!Ival::from_si(1, p.B.prec()).certainly_lt(p.B))
        throw DomainError("davenport_reduce: B must exceed 1");
    int qi = first_convergent_exceeding(cf, 6 * p.M);
    ReductionOutcome first;
    bool have_first = false;
    Ival log_B = log(p.B);
    for (int i = 0; i <= max_escalations && qi + i < static_cast<int>(cf.q.size()); ++i) {
        DavenportEngine engine(cf, p.tau, p.M, qi + i);
        Ival eps = engine.epsilon(p.mu);
        if (eps.certainly_positive())
            return {ReductionStatus::bounded, eps, engine.w_bound(p.A, log_B, eps), qi + i};
        if (!have_first) {
            first = {ReductionStatus::epsilon_nonpositive, eps, 0, qi + i};
            have_first = true;
        }
    }
    return first;
}

ReductionContext make_reduction_context(PrecisionContext ctx, const mpz_class& M, int cf_depth) {
    ReductionContext rc;
    rc.roots = solve_plastic_cubic(ctx);
    rc.coeffs = binet_coefficients(rc.roots);
    rc.M = M;
    const mpfr_prec_t bits = rc.roots.ctx.bits();
    rc.log_alpha = log(rc.roots.alpha);
    rc.tau = log(Ival::from_si(10, bits)) / rc.log_alpha;
    rc.log_9a = log(rc.coeffs.a * 9);
    CertifiedValueFn tau_fn = [](int digits) {
        PlasticRootSystem r = solve_plastic_cubic(PrecisionContext(std::max(digits, 50)));
        return log(Ival::from_si(10, r.ctx.bits())) / log(r.alpha);
    };
    rc.cf = expand(tau_fn, cf_depth, rc.roots.ctx);
    return rc;
}

namespace {

struct EpsTracker {
    Ival min_eps;
    bool any = false;

    void feed(const Ival& eps) {
        if (!any || mpfr_cmp(eps.lo(), min_eps.lo()) < 0) {
            min_eps = eps;
            any = true;
        }
    }
    void merge(const EpsTracker& o) {
        if (o.any) feed(o.min_eps);
    }
};

// integer-mu test for the exception protocol
bool mu_is_integer(const Ival& mu, long& out) {
    mpz_class n = mu.round_mid();
    if (!(mu - Ival::from_mpz(n, mu.prec())).contains_zero()) return false;
    out = n.get_si();
    return true;
}

// Cached engines at the base convergent and a few deeper ones, for cells
// whose epsilon happens to be non-positive at the base. ||tau q|| shrinks at
// each level while ||mu q|| stays generic, so a couple of levels suffice.
class EscalationLadder {
  public:
    EscalationLadder(const ContinuedFractionExpansion& cf, const Ival& tau, const mpz_class& M,
                     int base_index, int levels = 8) {
        for (int i = 1; i <= levels && base_index + i < static_cast<int>(cf.q.size()); ++i)
            engines_.emplace_back(cf, tau, M, base_index + i);
    }

    // bound for a cell already known non-positive at the base; throws if no
    // cached level certifies a positive epsilon
    long resolve(const Ival& mu, const Ival& A, const Ival& log_B, const char* what) const {
        for (const DavenportEngine& e : engines_) {
            Ival eps = e.epsilon(mu);
            if (eps.certainly_positive()) return e.w_bound(A, log_B, eps);
        }
        throw UnresolvedException(std::string(what) + ": non-positive epsilon at every convergent");
    }

  private:
    std::vector<DavenportEngine> engines_;
};

}  // namespace

StageOutcome stage1(const ReductionContext& rc) {
    const mpfr_prec_t bits = rc.roots.ctx.bits();
    const long A = a_coefficient(10, rc.log_alpha, 36);
    const Ival A_iv = Ival::from_si(A, bits);
    int qi = first_convergent_exceeding(rc.cf, 6 * rc.M);
    DavenportEngine engine(rc.cf, rc.tau, rc.M, qi);

    StageOutcome out;
    out.q_index = qi;
    EpsTracker tracker;
    EscalationLadder ladder(rc.cf, rc.tau, rc.M, qi);
    for (int d = 1; d <= 9; ++d) {
        Ival mu = (log(Ival::from_si(d, bits)) - rc.log_9a) / rc.log_alpha;
        Ival eps = engine.epsilon(mu);
        if (eps.certainly_positive()) {
            tracker.feed(eps);
            continue;
        }
        long mu_int = 0;
        if (mu_is_integer(mu, mu_int))
            throw UnresolvedException("stage1: integer mu at d=" + std::to_string(d));
        out.escalated_cells += 1;
        out.escalated_bound =
            std::max(out.escalated_bound, ladder.resolve(mu, A_iv, rc.log_alpha, "stage1"));
    }
    if (tracker.any) {
        out.min_epsilon = tracker.min_eps;
        out.main_bound = engine.w_bound(A_iv, rc.log_alpha, tracker.min_eps);
    } else {
        out.min_epsilon = Ival::from_si(0, bits);
    }
    out.bound = std::max(out.main_bound, out.escalated_bound);
    out.reported_bound = std::max(out.bound, 20L);
    return out;
}

StageOutcome stage2(const ReductionContext& rc, long k_max) {
    const mpfr_prec_t bits = rc.roots.ctx.bits();
    const long A = a_coefficient(6, rc.log_alpha, 22);
    const Ival A_iv = Ival::from_si(A, bits);
    int qi = first_convergent_exceeding(rc.cf, 6 * rc.M);
    DavenportEngine engine(rc.cf, rc.tau, rc.M, qi);

    std::vector<Ival> log_d(10, Ival(bits));
    for (int d = 1; d <= 9; ++d) log_d[static_cast<size_t>(d)] = log(Ival::from_si(d, bits));

    StageOutcome out;
    out.q_index = qi;
    EpsTracker tracker;
    EscalationLadder ladder(rc.cf, rc.tau, rc.M, qi);
    Ival pow_k = Ival::from_si(1, bits);
    for (long k = 1; k <= k_max; ++k) {
        pow_k *= rc.roots.alpha;
        Ival log_term = log(pow_k + 1);
        for (int d = 1; d <= 9; ++d) {
            Ival mu = (log_d[static_cast<size_t>(d)] - rc.log_9a - log_term) / rc.log_alpha;
            Ival eps = engine.epsilon(mu);
            if (eps.certainly_positive()) {
                tracker.feed(eps);
                continue;
            }
            // exception protocol: an integer mu is a structural degeneracy
            // (the form turns homogeneous); anything else is a chance
            // near-miss at this convergent, re-bounded at a deeper one
            long mu_int = 0;
            if (mu_is_integer(mu, mu_int)) {
                SweepException ex;
                ex.d = d;
                ex.k = k;
                HomogeneousReduction hr =
                    homogeneous_reduce(rc.cf, rc.M, Ival::from_si(6, bits) / rc.log_alpha,
                                       rc.log_alpha);
                ex.mu_integer = mu_int;
                ex.resolved_bound = hr.bound();
                ex.resolution = "integer-mu";
                out.homogeneous_bound = std::max(out.homogeneous_bound, ex.resolved_bound);
                out.exceptions.push_back(std::move(ex));
            } else {
                out.escalated_cells += 1;
                out.escalated_bound = std::max(
                    out.escalated_bound, ladder.resolve(mu, A_iv, rc.log_alpha, "stage2"));
            }
        }
    }
    if (!tracker.any) throw UnresolvedException("stage2: no positive epsilon in sweep");
    out.min_epsilon = tracker.min_eps;
    out.main_bound = engine.w_bound(A_iv, rc.log_alpha, tracker.min_eps);
    out.bound = std::max(out.main_bound, std::max(out.escalated_bound, out.homogeneous_bound));
    out.reported_bound = std::max(out.bound, 20L);
    return out;
}

namespace {

struct Stage3Partial {
    EpsTracker tracker;
    std::vector<std::tuple<int, long, long, Ival>> flagged;  // (d, k, s, mu)
};

void stage3_cell(const ReductionContext& rc, const DavenportEngine& engine,
                 const std::vector<Ival>& d_term_q, const Ival& q_over_la, const Ival& log_term,
                 long k, long s, Stage3Partial& acc) {
    const Ival t = log_term * q_over_la;
    for (int d = 1; d <= 9; ++d) {
        Ival mu_q = d_term_q[static_cast<size_t>(d)] - t;
        Ival eps = mu_q.dist_to_nearest_int() - engine.m_tau_q_norm();
        if (eps.certainly_positive()) {
            acc.tracker.feed(eps);
        } else {
            Ival mu = div_mpz(mu_q, engine.q());
            acc.flagged.emplace_back(d, k, s, mu);
        }
    }
}

}  // namespace

StageOutcome stage3(const ReductionContext& rc, long k_max, long s_max, bool parallel) {
    const mpfr_prec_t bits = rc.roots.ctx.bits();
    const long A = a_coefficient(10, rc.log_alpha, 36);
    const Ival A_iv = Ival::from_si(A, bits);
    int qi = first_convergent_exceeding(rc.cf, 6 * rc.M);
    DavenportEngine engine(rc.cf, rc.tau, rc.M, qi);

    // mu q = ((log d - log 9a) - log(1 + alpha^k + alpha^s)) * q / log alpha;
    // the d-dependent part is hoisted out of the sweep
    const Ival q_over_la = mul_mpz(1L / rc.log_alpha, engine.q());
    std::vector<Ival> d_term_q(10, Ival(bits));
    for (int d = 1; d <= 9; ++d)
        d_term_q[static_cast<size_t>(d)] =
            (log(Ival::from_si(d, bits)) - rc.log_9a) * q_over_la;

    std::vector<Ival> pow_alpha;
    pow_alpha.reserve(static_cast<size_t>(k_max) + 1);
    pow_alpha.push_back(Ival::from_si(1, bits));
    for (long k = 1; k <= k_max; ++k) pow_alpha.push_back(pow_alpha.back() * rc.roots.alpha);

    Stage3Partial total;
#ifdef _OPENMP
    if (parallel) {
        std::vector<Stage3Partial> parts;
#pragma omp parallel
        {
#pragma omp single
            parts.resize(static_cast<size_t>(omp_get_num_threads()));
            Stage3Partial& mine = parts[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
            for (long k = 1; k <= k_max; ++k) {
                for (long s = 1; s <= std::min(k, s_max); ++s) {
                    Ival log_term = log(pow_alpha[static_cast<size_t>(k)] +
                                        pow_alpha[static_cast<size_t>(s)] + 1);
                    stage3_cell(rc, engine, d_term_q, q_over_la, log_term, k, s, mine);
                }
            }
        }
        for (Stage3Partial& p : parts) {
            total.tracker.merge(p.tracker);
            for (auto& f : p.flagged) total.flagged.push_back(std::move(f));
        }
    } else
#else
    (void)parallel;
#endif
    {
        for (long k = 1; k <= k_max; ++k)
            for (long s = 1; s <= std::min(k, s_max); ++s) {
                Ival log_term =
                    log(pow_alpha[static_cast<size_t>(k)] + pow_alpha[static_cast<size_t>(s)] + 1);
                stage3_cell(rc, engine, d_term_q, q_over_la, log_term, k, s, total);
            }
    }

    StageOutcome out;
    out.q_index = qi;
    std::sort(total.flagged.begin(), total.flagged.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
    });
    EscalationLadder ladder(rc.cf, rc.tau, rc.M, qi);
    for (auto& [d, k, s, mu] : total.flagged) {
        long mu_int = 0;
        if (mu_is_integer(mu, mu_int)) {
            SweepException ex;
            ex.d = d;
            ex.k = k;
            ex.s = s;
            HomogeneousReduction hr = homogeneous_reduce(
                rc.cf, rc.M, Ival::from_si(10, bits) / rc.log_alpha, rc.log_alpha);
            ex.mu_integer = mu_int;
            ex.resolved_bound = hr.bound();
            ex.resolution = "integer-mu";
            out.homogeneous_bound = std::max(out.homogeneous_bound, ex.resolved_bound);
            out.exceptions.push_back(std::move(ex));
        } else {
            out.escalated_cells += 1;
            out.escalated_bound =
                std::max(out.escalated_bound, ladder.resolve(mu, A_iv, rc.log_alpha, "stage3"));
        }
    }
    if (!total.tracker.any) throw UnresolvedException("stage3: no positive epsilon in sweep");
    out.min_epsilon = total.tracker.min_eps;
    out.main_bound = engine.w_bound(A_iv, rc.log_alpha, total.tracker.min_eps);
    out.bound = std::max(out.main_bound, std::max(out.escalated_bound, out.homogeneous_bound));
    out.reported_bound = std::max(out.bound, 20L);
    return out;
}

bool verify_kap_identity(const PlasticRootSystem& roots) {
    const mpfr_prec_t bits = roots.ctx.bits();
    const Ival tol = tol_for(roots.ctx, bits);
    Ival lhs = pow_si(roots.alpha, -9);
    Ival rhs = (sqr(roots.alpha) * 3 - 1) /
               ((roots.alpha + 1) * (pow_si(roots.alpha, 11) + 1));
    return abs(lhs - rhs).certainly_lt(tol);
}

Ival mu_9_11(const ReductionContext& rc) {
    const mpfr_prec_t bits = rc.roots.ctx.bits();
    Ival log_term = log(pow_si(rc.roots.alpha, 11) + 1);
    return (log(Ival::from_si(9, bits)) - rc.log_9a - log_term) / rc.log_alpha;
}

ReductionCertificate run_full_reduction(const ReductionContext& rc, long search_threshold,
                                        bool parallel) {
    ReductionCertificate cert;
    cert.M = rc.M;
    cert.search_threshold = search_threshold;
    cert.s1 = stage1(rc);
    cert.q_index = cert.s1.q_index;
    cert.q = rc.cf.q.at(static_cast<size_t>(cert.q_index));
    cert.s2 = stage2(rc, cert.s1.reported_bound);
    cert.s3 = stage3(rc, cert.s1.reported_bound + cert.s2.reported_bound, cert.s2.reported_bound,
                     parallel);
    cert.contradiction = cert.s3.reported_bound <= search_threshold;
    return cert;
}

}  // namespace padrep
