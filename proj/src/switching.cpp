#include "fsw/switching.hpp"

#include <map>
#include <tuple>

namespace fsw {

namespace {

void validate(long long m, int n, int k) {
    if (n < 1)
        throw Error("switch: n must be >= 1");
    if (k < 1)
        throw Error("switch: k must be >= 1");
    if ((m + n) % 2 != 0)
        throw Error("switch: m + n must be an even integer");
}

PieceKind classify(long long delta) {
    if (delta > 0)
        return PieceKind::R0;
    if (delta < 0)
        return PieceKind::R1;
    return PieceKind::Zero;
}

// Base-form exponent data of one step: delta > 0 gives S^{(m+n)/2 - pn - 1}(U),
// delta < 0 gives S^{-(m+n)/2 + pn - 1}(U*).
long long sym_exponent_of(long long m, int n, int p, long long delta) {
    return delta > 0 ? (m + n) / 2 - static_cast<long long>(p) * n - 1
                     : -(m + n) / 2 + static_cast<long long>(p) * n - 1;
}

// One obstruction/kernel piece as a KClass term. With base data the piece is
// the symmetric power with explicit roots; otherwise an opaque rank-only
// symbol keyed by the kind and the twist exponent p.
KClass piece_class(const SwitchProblem& problem, const StepRecord& step) {
    const long long p = step.p;
    if (problem.base) {
        const BundleSymbol& u = problem.base->u;
        KClass piece = step.kind == PieceKind::R0
                           ? sym_power(u, static_cast<int>(*step.sym_exponent))
                           : sym_power(dual(u), static_cast<int>(*step.sym_exponent));
        return tensor_line(piece, problem.base->l0);
    }
    std::string name = (step.kind == PieceKind::R0 ? "R0pi(N^" : "R1pi(N^") + std::to_string(p) +
                       "(x)P)";
    return KClass::of(BundleSymbol::opaque(std::move(name), static_cast<int>(step.piece_rank)));
}

} // namespace

std::string to_string(PieceKind k) {
    switch (k) {
    case PieceKind::R0:
        return "R0";
    case PieceKind::Zero:
        return "ZERO";
    case PieceKind::R1:
        return "R1";
    }
    return "?";
}

long long expected_dim_delta(long long m, int n, int p) {
    if (n < 1 || p < 1)
        throw Error("expected_dim_delta: need n >= 1 and p >= 1");
    if ((m + n) % 2 != 0)
        throw Error("expected_dim_delta: m + n must be an even integer");
    return m - (2 * static_cast<long long>(p) - 1) * n;
}

static std::vector<StepRecord> make_steps(const SwitchProblem& problem) {
    validate(problem.m, problem.n, problem.k);
    if (problem.base && (problem.base->u.rank != 2 || !problem.base->u.has_roots()))
        throw Error("analyze: base symbol must be rank 2 with roots");
    std::vector<StepRecord> steps;
    for (int p = 1; p <= problem.k; ++p) {
        StepRecord step;
        step.p = p;
        step.delta = expected_dim_delta(problem.m, problem.n, p);
        step.kind = classify(step.delta);
        step.piece_rank = (step.delta < 0 ? -step.delta : step.delta) / 2;
        if (problem.base && step.kind != PieceKind::Zero) {
            step.sym_exponent = sym_exponent_of(problem.m, problem.n, p, step.delta);
            if (*step.sym_exponent < 0)
                throw Error("analyze: negative symmetric-power exponent (classification bug)");
        }
        steps.push_back(step);
    }
    return steps;
}

SwitchReport analyze(const SwitchProblem& problem) {
    SwitchReport report;
    report.problem = problem;
    report.steps = make_steps(problem);

    long long signed_rank = 0;
    for (const auto& step : report.steps) {
        if (step.kind == PieceKind::Zero)
            continue;
        KClass piece = piece_class(problem, step);
        if (step.kind == PieceKind::R1) {
            report.v_class += piece;
            signed_rank += step.piece_rank;
        } else {
            report.v_class -= piece;
            signed_rank -= step.piece_rank;
        }
    }

    const long long k = problem.k;
    report.virtual_rank = (k * k * problem.n - k * problem.m) / 2;
    if (signed_rank != report.virtual_rank)
        throw Error("analyze: piece ranks disagree with the virtual rank (internal error)");
    if (rank(report.v_class) != report.virtual_rank)
        throw Error("analyze: v_class rank disagrees with the virtual rank (internal error)");

    if (problem.base)
        report.chern_of_v = total_chern(report.v_class, problem.base->u.model_ring());
    return report;
}

std::vector<SymPiece> decompose_sym(const SwitchProblem& problem) {
    if (!problem.base)
        throw Error("decompose_sym: base data with U required");
    std::vector<SymPiece> pieces;
    for (const auto& step : make_steps(problem)) {
        if (step.kind == PieceKind::Zero)
            continue;
        SymPiece piece;
        piece.p = step.p;
        piece.sign = step.kind == PieceKind::R0 ? 1 : -1;
        piece.exponent = *step.sym_exponent;
        piece.dual = step.kind == PieceKind::R1;
        piece.twist = problem.base->l0.name;
        pieces.push_back(piece);
    }
    return pieces;
}

namespace {

std::vector<ExpansionEntry> expand(const SwitchReport& report, const GradedClass& insertion,
                                   bool inverse) {
    if (!report.chern_of_v)
        throw Error("expand: report carries no Chern data (base missing)");
    const GradedClass& c = *report.chern_of_v;
    if (insertion.ring() != c.ring())
        throw Error("expand: insertion lives in the wrong ring");
    const GradedClass total = inverse ? invert_unit(c) : c;
    std::vector<ExpansionEntry> entries;
    for (int d = 0; d <= c.ring()->truncation(); ++d) {
        GradedClass coeff = grade(total, d) * insertion;
        if (coeff.is_zero())
            continue;
        entries.push_back({std::move(coeff), inverse ? "FSW(., L_k)" : "FSW(., L)"});
    }
    return entries;
}

} // namespace

std::vector<ExpansionEntry> expand_switch(const SwitchReport& report,
                                          const GradedClass& insertion) {
    return expand(report, insertion, false);
}

std::vector<ExpansionEntry> expand_inverse(const SwitchReport& report,
                                           const GradedClass& insertion) {
    return expand(report, insertion, true);
}

bool check_consistency(long long m, int n, int k1, int k2) {
    if (n < 1)
        throw Error("check_consistency: n must be >= 1");
    if (k1 < 0 || k2 < 0)
        throw Error("check_consistency: multiplicities must be non-negative");
    if ((m + n) % 2 != 0)
        throw Error("check_consistency: m + n must be an even integer");

    using Entry = std::tuple<long long, PieceKind, long long>; // exponent, kind, rank
    std::map<Entry, long long> joined, direct;

    auto record = [](std::map<Entry, long long>& into, long long m0, int n0, int steps,
                     int shift) {
        for (int i = 1; i <= steps; ++i) {
            long long delta = expected_dim_delta(m0, n0, i);
            PieceKind kind = classify(delta);
            if (kind == PieceKind::Zero)
                continue;
            ++into[{i + shift, kind, (delta < 0 ? -delta : delta) / 2}];
        }
    };

    // V_{1,2}: steps on L; V_{2,3}: steps on L_{k1}, exponents shifted by k1.
    record(joined, m, n, k1, 0);
    record(joined, m - 2LL * k1 * n, n, k2, k1);
    // V_{1,3}: one-stage switching.
    record(direct, m, n, k1 + k2, 0);
    return joined == direct;
}

GtRankCheck gt_rank_check(long long m, int n, int k) {
    validate(m, n, k);
    const long long q = (m + n - 2) / 2;
    if (q >= 0)
        throw Error("gt_rank_check: requires q = (m+n-2)/2 < 0");
    GtRankCheck result;
    result.lhs = (static_cast<long long>(k) * k * n - static_cast<long long>(k) * m) / 2;
    for (long long i = 1; i <= k; ++i)
        result.rhs += (i * n - 1) + (-q);
    result.equal = result.lhs == result.rhs;
    return result;
}

} // namespace fsw
