#pragma once

#include "fsw/kcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsw {

enum class PieceKind { R0, Zero, R1 };

std::string to_string(PieceKind k);

// Optional base data that makes Chern classes of the obstruction pieces
// computable: C = P(U) for a rank-2 symbol with roots, and the square root
// of the base line class carried as a twist.
struct SwitchBase {
    BundleSymbol u;
    LineTwist l0;
};

struct SwitchProblem {
    long long m = 0; // fiberwise degree of L along C
    int n = 1;       // -C.C fiberwise, >= 1
    int k = 1;       // switch multiplicity, >= 1
    std::optional<SwitchBase> base;
};

struct StepRecord {
    int p = 0;
    long long delta = 0; // m - (2p-1) n
    PieceKind kind = PieceKind::Zero;
    long long piece_rank = 0; // |delta| / 2
    std::optional<long long> sym_exponent;
};

struct SwitchReport {
    SwitchProblem problem;
    std::vector<StepRecord> steps;
    KClass v_class;                 // obstruction pieces positive, kernel pieces negative
    long long virtual_rank = 0;     // (k^2 n - k m) / 2
    std::optional<GradedClass> chern_of_v;
};

// Difference of adjacent expected dimensions at step p.
long long expected_dim_delta(long long m, int n, int p);

SwitchReport analyze(const SwitchProblem& problem);

// One entry of the symmetric-power decomposition: sign * S^exponent(U or U*)
// tensored by the twist. Follows the per-step kernel/obstruction dichotomy,
// kernel steps listed positively.
struct SymPiece {
    int p = 0;
    int sign = 1;
    long long exponent = 0;
    bool dual = false; // S^e(U*) when true
    std::string twist;
};

std::vector<SymPiece> decompose_sym(const SwitchProblem& problem);

struct ExpansionEntry {
    GradedClass coefficient;
    std::string target; // "FSW(., L)" or "FSW(., L_k)"
};

// Expands an evaluation against L_k into coefficients against L:
// entry i carries grade(c(V), i) * insertion.
std::vector<ExpansionEntry> expand_switch(const SwitchReport& report, const GradedClass& insertion);
// Inverse direction via Segre classes: grade(s(V), j) * insertion against L_k.
std::vector<ExpansionEntry> expand_inverse(const SwitchReport& report, const GradedClass& insertion);

// Two-stage switching (k1 then k2) matches one-stage switching (k1 + k2):
// signed twist-exponent multisets must coincide.
bool check_consistency(long long m, int n, int k1, int k2);

struct GtRankCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool equal = false;
};

// Rank identity of the alternative K-group representation, valid when
// q = (m + n - 2)/2 < 0: per-term ranks (in - 1) + (-q) must sum to the
// virtual rank.
GtRankCheck gt_rank_check(long long m, int n, int k);

} // namespace fsw
