#include "fsw/adgraph.hpp"

#include <algorithm>
#include <sstream>

namespace fsw {

AdmissibleGraph::AdmissibleGraph(int n) : parent_(static_cast<std::size_t>(n), 0) {
    if (n < 1)
        throw Error("admissible graph needs n >= 1");
}

AdmissibleGraph::AdmissibleGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : AdmissibleGraph(n) {
    for (const auto& [p, c] : edges) {
        if (p < 1 || c < 1 || p > n || c > n)
            throw Error("admissible graph: vertex label out of range");
        if (p >= c)
            throw Error("admissible graph: parent label must be smaller than child label");
        if (parent_[static_cast<std::size_t>(c - 1)] != 0)
            throw Error("admissible graph: vertex " + std::to_string(c) + " has two parents");
        parent_[static_cast<std::size_t>(c - 1)] = p;
    }
}

int AdmissibleGraph::parent(int v) const {
    if (v < 1 || v > n())
        throw Error("admissible graph: vertex label out of range");
    return parent_[static_cast<std::size_t>(v - 1)];
}

std::vector<int> AdmissibleGraph::children(int v) const {
    std::vector<int> out;
    for (int c = v + 1; c <= n(); ++c)
        if (parent(c) == v)
            out.push_back(c);
    return out;
}

int AdmissibleGraph::edge_count() const {
    int count = 0;
    for (int v = 1; v <= n(); ++v)
        if (parent(v) != 0)
            ++count;
    return count;
}

std::vector<std::pair<int, int>> AdmissibleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= n(); ++v)
        if (parent(v) != 0)
            out.emplace_back(parent(v), v);
    std::sort(out.begin(), out.end());
    return out;
}

AdmissibleGraph AdmissibleGraph::with_children_cleared(const std::set<int>& vertices) const {
    AdmissibleGraph g(*this);
    for (int v = 1; v <= n(); ++v)
        if (vertices.count(g.parent(v)))
            g.parent_[static_cast<std::size_t>(v - 1)] = 0;
    return g;
}

std::string AdmissibleGraph::str() const {
    std::ostringstream os;
    os << "{n=" << n() << ", edges=[";
    bool first = true;
    for (const auto& [p, c] : edges()) {
        if (!first)
            os << ", ";
        os << p << "->" << c;
        first = false;
    }
    os << "]}";
    return os.str();
}

ExcClass e_class(const AdmissibleGraph& g, int i) {
    if (i < 1 || i > g.n())
        throw Error("e_class: index out of range");
    ExcClass e;
    e.coeffs.assign(static_cast<std::size_t>(g.n()), 0);
    e.coeffs[static_cast<std::size_t>(i - 1)] = 1;
    for (int c : g.children(i))
        e.coeffs[static_cast<std::size_t>(c - 1)] = -1;
    return e;
}

long long pair(const ExcClass& x, const ExcClass& y, const PairingContext& ctx) {
    if (x.coeffs.size() != y.coeffs.size())
        throw Error("pair: mismatched basis sizes");
    long long v = x.c_coeff * y.c_coeff * ctx.c_selfint;
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        v -= x.coeffs[i] * y.coeffs[i];
    return v;
}

ExcClass ambient_minus_multiplicities(const PairingContext& ctx, int n) {
    if (static_cast<int>(ctx.m.size()) != n)
        throw Error("pairing context: need one multiplicity per vertex");
    for (long long mi : ctx.m)
        if (mi < 1)
            throw Error("pairing context: multiplicities must be >= 1");
    ExcClass c;
    c.c_coeff = 1;
    c.coeffs.reserve(ctx.m.size());
    for (long long mi : ctx.m)
        c.coeffs.push_back(-mi);
    return c;
}

int codim(const AdmissibleGraph& g) {
    const int edges = g.edge_count();
    // Cross-check against the intersection model: K = sum E_l.
    PairingContext unit;
    unit.m.assign(static_cast<std::size_t>(g.n()), 1);
    ExcClass K;
    K.coeffs.assign(static_cast<std::size_t>(g.n()), 1);
    long long doubled = 0;
    for (int i = 1; i <= g.n(); ++i) {
        ExcClass e = e_class(g, i);
        doubled -= pair(e, e, unit) - pair(e, K, unit);
    }
    if (doubled != 2LL * edges)
        throw Error("codim: edge count disagrees with -sum(e^2 - e.K)/2 (model inconsistency)");
    return edges;
}

bool special_condition(const AdmissibleGraph& g, const PairingContext& ctx) {
    const ExcClass c = ambient_minus_multiplicities(ctx, g.n());
    for (int i = 1; i <= g.n(); ++i) {
        ExcClass e = e_class(g, i);
        if (pair(c, e, ctx) < 0)
            continue;
        if (pair(e, e, ctx) == -1)
            continue;
        return false;
    }
    return true;
}

std::set<int> negative_set(const AdmissibleGraph& g, const PairingContext& ctx) {
    const ExcClass c = ambient_minus_multiplicities(ctx, g.n());
    std::set<int> out;
    for (int i = 1; i <= g.n(); ++i)
        if (pair(c, e_class(g, i), ctx) < 0)
            out.insert(i);
    return out;
}

std::optional<std::vector<long long>> effective_coeffs(const ExcClass& x,
                                                       const AdmissibleGraph& g) {
    if (x.c_coeff != 0)
        throw Error("effective_coeffs: class must have no ambient component");
    if (static_cast<int>(x.coeffs.size()) != g.n())
        throw Error("effective_coeffs: basis size mismatch");
    // x_j = c_j - c_{parent(j)}, so c_j = x_j + c_{parent(j)}; labels ascend
    // from roots, so parents are solved first.
    std::vector<long long> c(x.coeffs.size(), 0);
    bool effective = true;
    for (int j = 1; j <= g.n(); ++j) {
        const int p = g.parent(j);
        c[static_cast<std::size_t>(j - 1)] =
            x.coeffs[static_cast<std::size_t>(j - 1)] +
            (p == 0 ? 0 : c[static_cast<std::size_t>(p - 1)]);
        if (c[static_cast<std::size_t>(j - 1)] < 0)
            effective = false;
    }
    if (!effective)
        return std::nullopt;
    return c;
}

bool partial_gt(const AdmissibleGraph& g, const AdmissibleGraph& g2) {
    if (g.n() != g2.n())
        throw Error("partial_gt: graphs must share the vertex set");
    if (g == g2)
        return false;
    for (int i = 1; i <= g.n(); ++i)
        if (!effective_coeffs(e_class(g, i), g2))
            return false;
    return true;
}

namespace {

ExcClass negative_set_difference(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                                 const PairingContext& ctx, const std::set<int>& drop) {
    ExcClass diff;
    diff.coeffs.assign(static_cast<std::size_t>(g.n()), 0);
    auto accumulate = [&diff](const ExcClass& e, long long sign) {
        for (std::size_t i = 0; i < diff.coeffs.size(); ++i)
            diff.coeffs[i] += sign * e.coeffs[i];
    };
    for (int i : negative_set(g, ctx))
        accumulate(e_class(g, i), 1);
    for (int j : negative_set(g2, ctx))
        if (!drop.count(j))
            accumulate(e_class(g2, j), -1);
    return diff;
}

} // namespace

bool partial_sqsupset(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                      const PairingContext& ctx) {
    if (g != g2 && !partial_gt(g, g2))
        return false;
    return effective_coeffs(negative_set_difference(g, g2, ctx, {}), g2).has_value();
}

bool partial_gg(const AdmissibleGraph& g, const AdmissibleGraph& g2, const PairingContext& ctx) {
    if (!partial_gt(g, g2))
        return false;
    for (int i : negative_set(g, ctx))
        if (e_class(g2, i) != e_class(g, i))
            return false;
    for (int j : negative_set(g2, ctx)) {
        ExcClass e = e_class(g, j);
        if (pair(e, e, ctx) == -1)
            return true;
    }
    return false;
}

bool partial_gg_or_equal(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                         const PairingContext& ctx) {
    return g == g2 || partial_gg(g, g2, ctx);
}

AdmissibleGraph find_intermediate(const AdmissibleGraph& g, const AdmissibleGraph& g2,
                                  const PairingContext& ctx) {
    if (!partial_gt(g, g2))
        throw Error("find_intermediate: requires partial_gt(g, g2)");
    if (!special_condition(g, ctx))
        throw Error("find_intermediate: g must satisfy the special condition");

    const std::set<int> I = negative_set(g, ctx);
    const std::set<int> J = negative_set(g2, ctx);
    std::vector<int> pool;
    for (int j : J)
        if (!I.count(j))
            pool.push_back(j);

    // Subsets of J - I by size, then lexicographically: the first hit is
    // minimal by cardinality, hence minimal by inclusion.
    std::optional<std::set<int>> j0;
    const std::size_t psize = pool.size();
    for (std::size_t size = 0; size <= psize && !j0; ++size) {
        std::vector<unsigned> mask_list;
        for (unsigned mask = 0; mask < (1u << psize); ++mask)
            if (static_cast<std::size_t>(__builtin_popcount(mask)) == size)
                mask_list.push_back(mask);
        for (unsigned mask : mask_list) {
            std::set<int> candidate;
            for (std::size_t b = 0; b < psize; ++b)
                if (mask & (1u << b))
                    candidate.insert(pool[b]);
            if (effective_coeffs(negative_set_difference(g, g2, ctx, candidate), g2)) {
                j0 = std::move(candidate);
                break;
            }
        }
    }
    if (!j0)
        throw Error("find_intermediate: no admissible subset found (model inconsistency)");

    AdmissibleGraph mid = g2.with_children_cleared(*j0);
    if (!partial_sqsupset(g, mid, ctx) || !partial_gg_or_equal(mid, g2, ctx))
        throw Error("find_intermediate: postcondition failed (model inconsistency)");
    return mid;
}

std::vector<AdmissibleGraph> enumerate_admissible(int n) {
    if (n < 1)
        throw Error("enumerate_admissible: n must be >= 1");
    if (n > 7)
        throw Error("enumerate_admissible: n > 7 is guarded off");
    std::vector<AdmissibleGraph> out;
    std::vector<std::pair<int, int>> edges;
    // Parent assignment p(j) in {none} u {1..j-1}, depth-first over j.
    auto rec = [&](auto&& self, int j) -> void {
        if (j > n) {
            out.emplace_back(n, edges);
            return;
        }
        self(self, j + 1); // j stays a root
        for (int p = 1; p < j; ++p) {
            edges.emplace_back(p, j);
            self(self, j + 1);
            edges.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fsw
