#include "fsw/kcalc.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace fsw {

namespace {

void require_degree_one(const GradedClass& c, const char* what) {
    int deg = 0;
    if (!c.homogeneous(deg) || (!c.is_zero() && deg != 1))
        throw Error(std::string(what) + " must be homogeneous of degree 1");
}

Integer binom(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace

BundleSymbol BundleSymbol::opaque(std::string name, int rank) {
    if (rank < 0)
        throw Error("bundle rank must be non-negative");
    BundleSymbol s;
    s.name = std::move(name);
    s.rank = rank;
    return s;
}

BundleSymbol BundleSymbol::with_roots(std::string name, std::vector<GradedClass> roots) {
    for (const auto& r : roots)
        require_degree_one(r, "Chern root");
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (roots[i].ring() != roots[0].ring())
            throw Error("Chern roots must live in one ring");
    BundleSymbol s;
    s.name = std::move(name);
    s.rank = static_cast<int>(roots.size());
    std::sort(roots.begin(), roots.end());
    s.model = std::move(roots);
    return s;
}

BundleSymbol BundleSymbol::with_formal(std::string name, std::vector<GradedClass> chern) {
    for (std::size_t i = 0; i < chern.size(); ++i) {
        int deg = 0;
        if (!chern[i].homogeneous(deg) || (!chern[i].is_zero() && deg != static_cast<int>(i) + 1))
            throw Error("formal Chern class c_" + std::to_string(i + 1) + " has wrong degree");
        if (chern[i].ring() != chern[0].ring())
            throw Error("formal Chern classes must live in one ring");
    }
    BundleSymbol s;
    s.name = std::move(name);
    s.rank = static_cast<int>(chern.size());
    s.model = FormalChern{std::move(chern)};
    return s;
}

BundleSymbol BundleSymbol::trivial(RingPtr ring, int rank, std::string name) {
    std::vector<GradedClass> roots(static_cast<std::size_t>(rank), GradedClass(std::move(ring)));
    return with_roots(std::move(name), std::move(roots));
}

RingPtr BundleSymbol::model_ring() const {
    if (has_roots() && !roots().empty())
        return roots().front().ring();
    if (has_formal() && !formal().classes.empty())
        return formal().classes.front().ring();
    return nullptr;
}

GradedClass BundleSymbol::total_chern() const {
    RingPtr ring = model_ring();
    if (!ring)
        throw Error("symbol '" + name + "' carries no Chern data");
    GradedClass c = GradedClass::one(ring);
    if (has_roots()) {
        for (const auto& r : roots())
            c *= GradedClass::one(ring) + r;
    } else {
        for (const auto& ci : formal().classes)
            c += ci;
    }
    return c;
}

namespace {

// Structural key: content decides equality; names matter only for
// model-less symbols.
int model_kind(const BundleSymbol& s) { return static_cast<int>(s.model.index()); }

bool term_key_less(const KClass::Term& a, const KClass::Term& b) {
    const BundleSymbol& x = a.symbol;
    const BundleSymbol& y = b.symbol;
    if (x.rank != y.rank)
        return x.rank < y.rank;
    if (model_kind(x) != model_kind(y))
        return model_kind(x) < model_kind(y);
    if (x.has_roots()) {
        if (x.roots() != y.roots())
            return x.roots() < y.roots();
    } else if (x.has_formal()) {
        if (x.formal().classes != y.formal().classes)
            return x.formal().classes < y.formal().classes;
    } else {
        if (x.name != y.name)
            return x.name < y.name;
        if (x.dualized != y.dualized)
            return x.dualized < y.dualized;
    }
    return a.twist < b.twist;
}

bool term_key_equal(const KClass::Term& a, const KClass::Term& b) {
    return !term_key_less(a, b) && !term_key_less(b, a);
}

} // namespace

KClass KClass::of(BundleSymbol symbol, long long mult) {
    return of(std::move(symbol), TwistTags{}, mult);
}

KClass KClass::of(BundleSymbol symbol, TwistTags twist, long long mult) {
    KClass k;
    k.add_term(Term{std::move(symbol), std::move(twist), mult});
    return k;
}

void KClass::add_term(Term t) {
    if (t.mult == 0)
        return;
    std::erase_if(t.twist, [](const auto& kv) { return kv.second == 0; });
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_key_less);
    if (it != terms_.end() && term_key_equal(*it, t)) {
        it->mult += t.mult;
        if (it->mult == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

KClass KClass::operator-() const {
    KClass r(*this);
    for (auto& t : r.terms_)
        t.mult = -t.mult;
    return r;
}

KClass& KClass::operator+=(const KClass& rhs) {
    for (const auto& t : rhs.terms_)
        add_term(t);
    return *this;
}

KClass& KClass::operator-=(const KClass& rhs) {
    for (const auto& t : rhs.terms_) {
        Term neg(t);
        neg.mult = -neg.mult;
        add_term(std::move(neg));
    }
    return *this;
}

std::string KClass::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << (t.mult > 0 ? " + " : " - ");
        else if (t.mult < 0)
            os << "-";
        long long a = t.mult < 0 ? -t.mult : t.mult;
        if (a != 1)
            os << a << "*";
        os << (t.symbol.name.empty() ? "?" : t.symbol.name);
        if (t.symbol.dualized)
            os << "^*";
        for (const auto& [tag, e] : t.twist)
            os << "(x)" << tag << (e == 1 ? "" : "^" + std::to_string(e));
        first = false;
    }
    return os.str();
}

long long rank(const KClass& k) {
    long long r = 0;
    for (const auto& t : k.terms())
        r += t.mult * t.symbol.rank;
    return r;
}

GradedClass total_chern(const KClass& k, RingPtr ring) {
    for (const auto& t : k.terms()) {
        RingPtr r = t.symbol.model_ring();
        if (!r)
            continue;
        if (!ring)
            ring = r;
        else if (ring != r)
            throw Error("total_chern: mixed rings");
    }
    if (!ring)
        throw Error("total_chern: no ring available");
    // Accumulate positive and negative parts separately; one inversion.
    GradedClass num = GradedClass::one(ring);
    GradedClass den = GradedClass::one(ring);
    for (const auto& t : k.terms()) {
        if (!t.twist.empty())
            throw Error("total_chern: opaque twist tag '" + t.twist.begin()->first +
                        "' has no Chern data");
        if (!t.symbol.model_ring()) {
            if (t.symbol.rank == 0)
                continue;
            throw Error("total_chern: symbol '" + t.symbol.name + "' carries no Chern data");
        }
        GradedClass cs = t.symbol.total_chern();
        GradedClass& target = t.mult < 0 ? den : num;
        long long a = t.mult < 0 ? -t.mult : t.mult;
        for (long long i = 0; i < a; ++i)
            target *= cs;
    }
    if (den.is_one())
        return num;
    return num * invert_unit(den);
}

GradedClass total_segre(const KClass& k, RingPtr ring) { return total_chern(-k, std::move(ring)); }

KClass sym_power(const BundleSymbol& u, int d) {
    if (u.rank != 2)
        throw Error("sym_power: symbol must have rank 2");
    if (!u.has_roots())
        throw Error("sym_power: symbol '" + u.name + "' has no Chern roots");
    if (d < 0)
        throw Error("sym_power: exponent must be non-negative");
    const GradedClass& u1 = u.roots()[0];
    const GradedClass& u2 = u.roots()[1];
    std::vector<GradedClass> roots;
    roots.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        roots.push_back(u1 * Rational(i) + u2 * Rational(d - i));
    return KClass::of(
        BundleSymbol::with_roots("S^" + std::to_string(d) + "(" + u.name + ")", std::move(roots)));
}

BundleSymbol dual(const BundleSymbol& s) {
    BundleSymbol r(s);
    if (r.has_roots() || r.has_formal()) {
        if (r.name.size() >= 1 && r.name.back() == '*')
            r.name.pop_back();
        else
            r.name += "*";
    }
    if (r.has_roots()) {
        auto roots = r.roots();
        for (auto& root : roots)
            root = -root;
        std::sort(roots.begin(), roots.end());
        r.model = std::move(roots);
    } else if (r.has_formal()) {
        auto chern = r.formal().classes;
        for (std::size_t i = 0; i < chern.size(); ++i)
            if (i % 2 == 0) // odd Chern classes flip sign
                chern[i] = -chern[i];
        r.model = FormalChern{std::move(chern)};
    } else {
        r.dualized = !r.dualized;
    }
    return r;
}

KClass dual(const KClass& k) {
    KClass r;
    for (const auto& t : k.terms()) {
        TwistTags twist;
        for (const auto& [tag, e] : t.twist)
            twist[tag] = -e;
        r += KClass::of(dual(t.symbol), std::move(twist), t.mult);
    }
    return r;
}

KClass tensor_line(const KClass& k, const LineTwist& t) {
    if (!t.c1 && t.name.empty())
        return k; // trivial twist
    KClass r;
    for (const auto& term : k.terms()) {
        BundleSymbol sym = term.symbol;
        TwistTags twist = term.twist;
        if (t.c1 && sym.has_roots()) {
            auto roots = sym.roots();
            for (auto& root : roots)
                root = root + *t.c1;
            std::sort(roots.begin(), roots.end());
            sym.model = std::move(roots);
        } else if (t.c1 && sym.has_formal()) {
            const auto old = sym.formal().classes;
            const long long rk = sym.rank;
            const GradedClass& c1t = *t.c1;
            RingPtr ring = c1t.ring();
            std::vector<GradedClass> twisted;
            twisted.reserve(old.size());
            for (long long kk = 1; kk <= rk; ++kk) {
                GradedClass ck(ring);
                for (long long j = 0; j <= kk; ++j) {
                    Integer b = binom(rk - j, kk - j);
                    if (b == 0)
                        continue;
                    GradedClass piece =
                        j == 0 ? GradedClass::one(ring) : old[static_cast<std::size_t>(j - 1)];
                    for (long long p = 0; p < kk - j; ++p)
                        piece *= c1t;
                    ck += piece * Rational(b);
                }
                twisted.push_back(std::move(ck));
            }
            sym.model = FormalChern{std::move(twisted)};
        } else {
            if (t.name.empty())
                throw Error("tensor_line: anonymous twist cannot attach to a model-less symbol");
            twist[t.name] += 1;
        }
        r += KClass::of(std::move(sym), std::move(twist), term.mult);
    }
    return r;
}

namespace {

// Canonical multiset for equality: rooted symbols expand to their line
// classes; formal and model-less symbols stay whole.
struct FlatKey {
    int kind = 0; // 0 root line, 1 formal, 2 opaque
    int rank = 0;
    std::vector<std::map<Monomial, Rational>> content;
    std::string name;
    bool dualized = false;
    TwistTags twist;

    bool operator<(const FlatKey& rhs) const {
        return std::tie(kind, rank, content, name, dualized, twist) <
               std::tie(rhs.kind, rhs.rank, rhs.content, rhs.name, rhs.dualized, rhs.twist);
    }
    bool operator==(const FlatKey& rhs) const {
        return std::tie(kind, rank, content, name, dualized, twist) ==
               std::tie(rhs.kind, rhs.rank, rhs.content, rhs.name, rhs.dualized, rhs.twist);
    }
};

std::map<FlatKey, long long> flatten(const KClass& k) {
    std::map<FlatKey, long long> out;
    auto bump = [&out](FlatKey key, long long mult) {
        auto [it, inserted] = out.emplace(std::move(key), mult);
        if (!inserted && (it->second += mult) == 0)
            out.erase(it);
    };
    for (const auto& t : k.terms()) {
        if (t.symbol.has_roots()) {
            for (const auto& root : t.symbol.roots()) {
                FlatKey key;
                key.kind = 0;
                key.rank = 1;
                key.content = {root.terms()};
                key.twist = t.twist;
                bump(std::move(key), t.mult);
            }
        } else if (t.symbol.has_formal()) {
            FlatKey key;
            key.kind = 1;
            key.rank = t.symbol.rank;
            for (const auto& c : t.symbol.formal().classes)
                key.content.push_back(c.terms());
            key.twist = t.twist;
            bump(std::move(key), t.mult);
        } else {
            FlatKey key;
            key.kind = 2;
            key.rank = t.symbol.rank;
            key.name = t.symbol.name;
            key.dualized = t.symbol.dualized;
            key.twist = t.twist;
            bump(std::move(key), t.mult);
        }
    }
    return out;
}

} // namespace

bool k_equal(const KClass& k1, const KClass& k2) { return flatten(k1) == flatten(k2); }

KClass strip_trivial(const KClass& k) {
    KClass r;
    for (const auto& t : k.terms()) {
        bool trivial = false;
        if (t.twist.empty()) {
            if (t.symbol.has_roots())
                trivial = std::all_of(t.symbol.roots().begin(), t.symbol.roots().end(),
                                      [](const GradedClass& c) { return c.is_zero(); });
            else if (t.symbol.has_formal())
                trivial = std::all_of(t.symbol.formal().classes.begin(),
                                      t.symbol.formal().classes.end(),
                                      [](const GradedClass& c) { return c.is_zero(); });
            else
                trivial = t.symbol.rank == 0;
        }
        if (!trivial)
            r += KClass::of(t.symbol, t.twist, t.mult);
    }
    return r;
}

} // namespace fsw
