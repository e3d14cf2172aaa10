#pragma once

#include <gmpxx.h>

#include <vector>

#include "padrep/contfrac.hpp"
#include "padrep/heights.hpp"
#include "padrep/padovan.hpp"
#include "padrep/roots.hpp"

namespace padrep {

/// One nonhomogeneous linear-form instance 0 < |u tau - v + mu| < A B^(-w),
/// u <= M.
struct ReductionProblem {
    Ival tau;
    Ival mu;
    Ival A;  // > 0
    Ival B;  // > 1
    mpz_class M;
};

enum class ReductionStatus { bounded, epsilon_nonpositive };

struct ReductionOutcome {
    ReductionStatus status = ReductionStatus::epsilon_nonpositive;
    Ival epsilon;
    long w_bound = 0;  // valid iff status == bounded
    int q_index = 0;
};

/// Precomputed state for one convergent q of tau: M||tau q|| and log q.
/// epsilon() is the hot path of the sweeps.
class DavenportEngine {
  public:
    DavenportEngine(const ContinuedFractionExpansion& cf, const Ival& tau, const mpz_class& M,
                    int q_index);

    /// epsilon = ||mu q|| - M ||tau q||.
    [[nodiscard]] Ival epsilon(const Ival& mu) const;
    /// Largest integer w compatible with Lemma-style threshold
    /// log(A q / eps) / log B, computed from the lower end of eps.
    [[nodiscard]] long w_bound(const Ival& A, const Ival& log_B, const Ival& eps) const;

    [[nodiscard]] int q_index() const { return q_index_; }
    [[nodiscard]] const mpz_class& q() const { return q_; }
    [[nodiscard]] const Ival& m_tau_q_norm() const { return m_tau_q_norm_; }

  private:
    mpz_class q_;
    int q_index_;
    Ival m_tau_q_norm_;
    Ival log_q_;
};

/// Lemma application with escalation to deeper convergents (q still > 6M)
/// before flagging a non-positive epsilon.
ReductionOutcome davenport_reduce(const ReductionProblem& p, const ContinuedFractionExpansion& cf,
                                  int max_escalations = 8);

/// Shared immutable state for the three reduction stages.
struct ReductionContext {
    PlasticRootSystem roots;
    BinetCoefficients coeffs;
    ContinuedFractionExpansion cf;
    Ival tau;        // log 10 / log alpha
    Ival log_alpha;
    Ival log_9a;     // log(9 a)
    mpz_class M;
};

/// Builds roots, coefficients, tau and its expansion at the given precision.
ReductionContext make_reduction_context(PrecisionContext ctx, const mpz_class& M,
                                        int cf_depth = 160);

/// A swept case that degenerates: mu collapses to an integer, so the linear
/// form becomes homogeneous and the Lemma does not apply at any convergent.
/// s < 0 marks a stage-2 pair (d, k).
struct SweepException {
    int d = 0;
    long k = 0;
    long s = -1;
    long mu_integer = 0;      // the integer mu collapsed to
    long resolved_bound = 0;  // bound from the homogeneous branch
    std::string resolution;   // "integer-mu"
};

struct StageOutcome {
    long bound = 0;           // max over all certified cases (all branches)
    long reported_bound = 0;  // max(bound, 20): the stages assume w >= 20
    long main_bound = 0;      // from min epsilon at the base convergent
    long homogeneous_bound = 0;
    long escalated_cells = 0;  // cells whose epsilon was non-positive at the
                               // base convergent and got a bound deeper
    long escalated_bound = 0;  // max bound over the escalated cells
    Ival min_epsilon;          // over cells positive at the base convergent
    std::vector<SweepException> exceptions;
    int q_index = 0;
};

/// Stage 1: mu_d = log(d/(9a))/log alpha, d = 1..9; bounds n1 - n2.
StageOutcome stage1(const ReductionContext& rc);

/// Stage 2: mu_{d,k} = log(d/(9a(1+alpha^k)))/log alpha over d = 1..9,
/// k = 1..k_max; bounds n2 - n3. Non-positive epsilons go through the
/// exception protocol: an integer mu is a genuine degeneracy resolved by
/// homogeneous_reduce and listed as an exception; any other such cell is a
/// chance near-miss at the base convergent, re-bounded at a deeper one and
/// folded into the stage bound.
StageOutcome stage2(const ReductionContext& rc, long k_max);

/// Stage 3: mu_{d,k,s} = log(d/(9a(1+alpha^k+alpha^s)))/log alpha over
/// d = 1..9, 1 <= s <= s_max, s <= k <= k_max; bounds n1. The sweep is
/// OpenMP-partitioned; set parallel = false for the serial reference.
StageOutcome stage3(const ReductionContext& rc, long k_max, long s_max, bool parallel = true);

/// 1/alpha^9 = (3 alpha^2 - 1)/((alpha+1)(alpha^11 + 1)), i.e.
/// a (1 + alpha^11) = alpha^9; the identity behind the stage-2 exceptional
/// pair (d, k) = (9, 11).
bool verify_kap_identity(const PlasticRootSystem& roots);

/// mu_{9,11} itself; encloses -9 when the identity holds.
Ival mu_9_11(const ReductionContext& rc);

struct ReductionCertificate {
    mpz_class M;
    int q_index = 0;
    mpz_class q;
    StageOutcome s1, s2, s3;
    long search_threshold = 500;
    bool contradiction = false;
};

/// stage1 -> stage2 -> stage3; contradiction iff the stage-3 bound closes
/// under the searched range.
ReductionCertificate run_full_reduction(const ReductionContext& rc, long search_threshold = 500,
                                        bool parallel = true);

}  // namespace padrep
