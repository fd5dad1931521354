#pragma once

#include "fsw/error.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fsw {

// Labeled forest of blowup descendants: vertices 1..n, every parent label
// smaller than its children, at most one parent per vertex.
class AdmissibleGraph {
public:
    explicit AdmissibleGraph(int n);
    AdmissibleGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(parent_.size()); }
    int parent(int v) const; // 0 when v is a root
    std::vector<int> children(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // sorted (parent, child)

    // Copy with the subtrees under each listed vertex detached (its children
    // become roots); turns each listed vertex into a -1 class.
    AdmissibleGraph with_children_cleared(const std::set<int>& vertices) const;

    bool operator==(const AdmissibleGraph& rhs) const = default;
    bool operator<(const AdmissibleGraph& rhs) const { return parent_ < rhs.parent_; }
    std::string str() const;

private:
    std::vector<int> parent_; // 1-based labels; 0 = none
};

// Integer vector over the exceptional basis E_1..E_n plus a multiple of the
// ambient class C. Pairing rules: E_i.E_j = -delta_ij, C.E_i = 0.
struct ExcClass {
    std::vector<long long> coeffs;
    long long c_coeff = 0;

    friend bool operator==(const ExcClass&, const ExcClass&) = default;
};

struct PairingContext {
    std::vector<long long> m; // multiplicities, each >= 1
    long long c_selfint = 0;  // C.C
    long long c_kpair = 0;    // C.K_M
};

// e_i = E_i - sum of E_j over the direct descendants j of i.
ExcClass e_class(const AdmissibleGraph& g, int i);
long long pair(const ExcClass& x, const ExcClass& y, const PairingContext& ctx);
// C - sum m_i E_i for the context multiplicities.
ExcClass ambient_minus_multiplicities(const PairingContext& ctx, int n);
// Number of edges, cross-checked against -sum (e_i^2 - e_i.K)/2 with
// K = sum E_l; a mismatch is a model inconsistency.
int codim(const AdmissibleGraph& g);
// Every vertex has pair(C - mE, e_i) < 0 or e_i^2 = -1.
bool special_condition(const AdmissibleGraph& g, const PairingContext& ctx);
// Vertices with pair(C - mE, e_i) < 0.
std::set<int> negative_set(const AdmissibleGraph& g, const PairingContext& ctx);
// Unique integer solution of x = sum c_j e_j(g) (triangular, roots first);
// present iff all c_j >= 0. Requires x.c_coeff = 0.
std::optional<std::vector<long long>> effective_coeffs(const ExcClass& x,
                                                       const AdmissibleGraph& g);
// g != g2 and every e_i(g) is an effective combination of the e_j(g2).
bool partial_gt(const AdmissibleGraph& g, const AdmissibleGraph& g2);
// The ordering with equality allowed: g == g2 or partial_gt, and
// sum_{I(g)} e_i - sum_{J(g2)} e_j' effective over g2.
bool partial_sqsupset(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                      const PairingContext& ctx);
// Strict: partial_gt, every i in I(g) keeps e_i unchanged in g2, and some
// j in J(g2) has e_j^2 = -1 taken in g.
bool partial_gg(const AdmissibleGraph& g, const AdmissibleGraph& g2, const PairingContext& ctx);
bool partial_gg_or_equal(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                         const PairingContext& ctx);
// Interpolation: clears the children of a minimal J0 subset of J(g2) - I(g)
// so that g sqsupseteq g'' gg-or-equal g2. Postcondition verified; failure
// is a model inconsistency.
AdmissibleGraph find_intermediate(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                                  const PairingContext& ctx);
// All labeled forests with parent < child on labels 1..n (n <= 7).
std::vector<AdmissibleGraph> enumerate_admissible(int n);

} // namespace fsw
