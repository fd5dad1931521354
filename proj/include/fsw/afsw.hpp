#pragma once

#include "fsw/kcalc.hpp"

#include <utility>
#include <vector>

namespace fsw {

// Numerical data of an algebraic family of surfaces.
struct FamilyData {
    int dimB = 0;
    int q = 0;   // irregularity
    int pg = 0;  // geometric genus
    int febd = 0; // formal excess base dimension, user-supplied, <= pg
    long long selfint = 0; // C.C
    long long kpair = 0;   // C.K_{X/B}
};

// Two-term locally free presentation (V, W); both symbols must carry Chern
// data in one ring. Rank relation: rank V - rank W =
// (C.C - C.K)/2 + pg - q + 1, with febd in place of pg in febd-mode.
struct KuranishiModel {
    BundleSymbol v;
    BundleSymbol w;
};

// Degree-(k - rank + 1) Segre component of v; the zero class when the index
// is negative. This is the projective-bundle pushforward of c_1(H)^k.
GradedClass pushforward_power(int k, const BundleSymbol& v);

// The pure family invariant reduction: grade(c(W - V), dimB + q). The ring
// argument is needed only when both symbols are rank 0.
GradedClass afsw_pure(const KuranishiModel& model, const FamilyData& fam, RingPtr ring = nullptr);
// Mixed variant: insertion of homogeneous eta drops the grade by deg(eta).
GradedClass afsw_mixed(const KuranishiModel& model, const FamilyData& fam, const GradedClass& eta);

// Reproduces the pushforward chain sum_{m <= rank W} s_{dimB+q-m}(V) c_m(W)
// term by term and compares with afsw_pure (or the eta-inserted variant).
bool verify_cal_chain(const KuranishiModel& model, const FamilyData& fam,
                      const GradedClass* eta = nullptr, RingPtr ring = nullptr);

enum class KStepClass { R0, ZeroTerm, R1Neg };

struct KStep {
    int p = 0;
    KStepClass cls = KStepClass::ZeroTerm;
    long long rank = 0;
};

// Classification of the p-th term of the k-step decomposition from its
// fiberwise degree: deg >= 0 gives R0 of rank deg+1, deg = -1 vanishes,
// deg < -1 gives -R1 of rank -deg-1.
std::vector<KStep> decompose_ksteps(int k, const std::vector<long long>& degs);
// Signed sum of the term ranks; always equals sum (deg_p + 1).
long long ksteps_virtual_rank(const std::vector<KStep>& steps);

struct ClassData {
    long long selfint = 0;
    long long kpair = 0;
    int febd = 0;
};

// The two expected-dimension inequalities, evaluated for C and C + k PD(C).
// febd monotonicity (febd(C) <= febd(C + k PD(C))) is a precondition.
std::pair<bool, bool> af_conditions(const FamilyData& fam, const ClassData& c0,
                                    const ClassData& ck);

// Strict dimension drop dim(C) - [dim(C - e1) + dim(e1)] = e.C - e.e under
// the hypothesis e.C > e.e; always >= 1.
long long prop_zero_gap(long long e_sq, long long e_dot_K, long long e_dot_C);

// Summation window of the localized-contribution bookkeeping:
// lower = rank G - rank N, upper = dim X' = m - rank N.
std::pair<long long, long long> step_iv_ranges(long long m, long long e, long long rankN,
                                               long long rankG);

enum class ResidueBranch { First, Second };

// Relative degree |x| of the residual divisor, first branch when x >= 0.
std::pair<long long, ResidueBranch> residue_degree(long long x);

// Formal-ledger helpers for localized top Chern classes. Classes are graded
// by cohomological degree; the dimension-(m - e) piece of a class on an
// m-dimensional ambient space is its degree-e component.
//
// Contribution of one component: grade(chern * segre, e).
GradedClass localized_contribution(const GradedClass& chern, const GradedClass& segre, int e);
// Grading constraint: every component of cls above degree e vanishes.
bool grading_window_vanishes(const GradedClass& cls, int e);
// Additivity over a disjoint decomposition: the summed contributions of the
// parts equal the contribution of the combined Segre data.
bool sum_localized_matches(const GradedClass& chern, const std::vector<GradedClass>& segres,
                           int e);

} // namespace fsw
