#include "fsw/afsw.hpp"

namespace fsw {

namespace {

void require_rank_relation(const KuranishiModel& model, const FamilyData& fam) {
    if (fam.febd > fam.pg)
        throw Error("family data: febd must not exceed pg");
    const long long lhs = 2LL * (model.v.rank - model.w.rank);
    const long long base = fam.selfint - fam.kpair - 2LL * fam.q + 2;
    if (lhs != base + 2LL * fam.pg && lhs != base + 2LL * fam.febd)
        throw Error("Kuranishi model: rank relation violated");
}

GradedClass segre_component(const BundleSymbol& v, int d, RingPtr ring = nullptr) {
    if (!ring)
        ring = v.model_ring();
    if (!ring)
        throw Error("symbol '" + v.name + "' carries no Chern data");
    if (d < 0)
        return GradedClass(ring);
    if (d > ring->truncation())
        throw Error("Segre component beyond ring truncation");
    return grade(total_segre(KClass::of(v), ring), d);
}

} // namespace

GradedClass pushforward_power(int k, const BundleSymbol& v) {
    if (k < 0)
        throw Error("pushforward_power: k must be non-negative");
    return segre_component(v, k - v.rank + 1);
}

GradedClass afsw_pure(const KuranishiModel& model, const FamilyData& fam, RingPtr ring) {
    require_rank_relation(model, fam);
    KClass diff = KClass::of(model.w) - KClass::of(model.v);
    return grade(total_chern(diff, std::move(ring)), fam.dimB + fam.q);
}

GradedClass afsw_mixed(const KuranishiModel& model, const FamilyData& fam,
                       const GradedClass& eta) {
    require_rank_relation(model, fam);
    int deg = 0;
    if (!eta.homogeneous(deg))
        throw Error("afsw_mixed: insertion must be homogeneous");
    KClass diff = KClass::of(model.w) - KClass::of(model.v);
    const int target = fam.dimB + fam.q - deg;
    if (target < 0)
        return GradedClass(eta.ring());
    return grade(total_chern(diff, eta.ring()), target) * eta;
}

bool verify_cal_chain(const KuranishiModel& model, const FamilyData& fam,
                      const GradedClass* eta, RingPtr ring) {
    require_rank_relation(model, fam);
    if (!ring)
        ring = model.v.model_ring() ? model.v.model_ring() : model.w.model_ring();
    if (!ring)
        throw Error("verify_cal_chain: no Chern data");
    int eta_deg = 0;
    if (eta && !eta->homogeneous(eta_deg))
        throw Error("verify_cal_chain: insertion must be homogeneous");
    const int target = fam.dimB + fam.q - eta_deg;
    if (target < 0 || target > ring->truncation())
        throw Error("verify_cal_chain: grade out of ring range");

    const GradedClass cw = total_chern(KClass::of(model.w), ring);
    GradedClass chain(ring);
    for (int m = 0; m <= model.w.rank && m <= ring->truncation(); ++m)
        chain += segre_component(model.v, target - m, ring) * grade(cw, m);
    if (eta)
        chain *= *eta;

    const GradedClass direct = eta ? afsw_mixed(model, fam, *eta) : afsw_pure(model, fam, ring);
    return chain == direct;
}

std::vector<KStep> decompose_ksteps(int k, const std::vector<long long>& degs) {
    if (k < 1)
        throw Error("decompose_ksteps: k must be >= 1");
    if (degs.size() != static_cast<std::size_t>(k))
        throw Error("decompose_ksteps: need one degree per step");
    std::vector<KStep> steps;
    steps.reserve(degs.size());
    for (int p = 1; p <= k; ++p) {
        const long long deg = degs[static_cast<std::size_t>(p - 1)];
        KStep step;
        step.p = p;
        if (deg >= 0) {
            step.cls = KStepClass::R0;
            step.rank = deg + 1;
        } else if (deg == -1) {
            step.cls = KStepClass::ZeroTerm;
            step.rank = 0;
        } else {
            step.cls = KStepClass::R1Neg;
            step.rank = -deg - 1;
        }
        steps.push_back(step);
    }
    return steps;
}

long long ksteps_virtual_rank(const std::vector<KStep>& steps) {
    long long r = 0;
    for (const auto& s : steps) {
        if (s.cls == KStepClass::R0)
            r += s.rank;
        else if (s.cls == KStepClass::R1Neg)
            r -= s.rank;
    }
    return r;
}

std::pair<bool, bool> af_conditions(const FamilyData& fam, const ClassData& c0,
                                    const ClassData& ck) {
    if (c0.febd > ck.febd)
        throw Error("af_conditions: febd must be monotone under adding multiples of the curve");
    const bool af1 = c0.selfint - c0.kpair + 2LL * (fam.dimB + c0.febd) >= 0;
    const bool af2 = ck.selfint - ck.kpair + 2LL * (fam.dimB + ck.febd) >= 0;
    return {af1, af2};
}

long long prop_zero_gap(long long e_sq, long long e_dot_K, long long e_dot_C) {
    if (e_dot_C <= e_sq)
        throw Error("prop_zero_gap: requires e.C > e.e");
    // Dimension route: dim(C) - dim(C - e) - dim(e) with dim(D) = (D.D - D.K)/2.
    // The e.K terms cancel; keeping them checks the bookkeeping.
    const long long doubled = (2 * e_dot_C - e_sq - e_dot_K) - (e_sq - e_dot_K);
    if (doubled % 2 != 0)
        throw Error("prop_zero_gap: parity violation (internal error)");
    const long long gap = doubled / 2;
    if (gap != e_dot_C - e_sq)
        throw Error("prop_zero_gap: route mismatch (internal error)");
    if (gap < 1)
        throw Error("prop_zero_gap: gap must be positive");
    return gap;
}

std::pair<long long, long long> step_iv_ranges(long long m, long long /*e*/, long long rankN,
                                               long long rankG) {
    return {rankG - rankN, m - rankN};
}

std::pair<long long, ResidueBranch> residue_degree(long long x) {
    return {x >= 0 ? x : -x, x >= 0 ? ResidueBranch::First : ResidueBranch::Second};
}

GradedClass localized_contribution(const GradedClass& chern, const GradedClass& segre, int e) {
    return grade(chern * segre, e);
}

bool grading_window_vanishes(const GradedClass& cls, int e) {
    for (int d = e + 1; d <= cls.ring()->truncation(); ++d)
        if (!grade(cls, d).is_zero())
            return false;
    return true;
}

bool sum_localized_matches(const GradedClass& chern, const std::vector<GradedClass>& segres,
                           int e) {
    GradedClass combined(chern.ring());
    GradedClass parts(chern.ring());
    for (const auto& s : segres) {
        combined += s;
        parts += localized_contribution(chern, s, e);
    }
    return parts == localized_contribution(chern, combined, e);
}

} // namespace fsw
