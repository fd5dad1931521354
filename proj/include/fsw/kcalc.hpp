#pragma once

#include "fsw/exactring.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fsw {

// Chern data of a symbol given by formal classes c_1..c_rank (each
// homogeneous of degree i, typically a single generator).
struct FormalChern {
    std::vector<GradedClass> classes;
};

// A named bundle symbol of fixed rank. The Chern model is one of:
//  - none: rank-only bookkeeping, no characteristic classes available;
//  - roots: degree-1 classes, one per rank unit (splitting principle);
//  - formal: classes c_1..c_rank.
struct BundleSymbol {
    std::string name;
    int rank = 0;
    std::variant<std::monostate, std::vector<GradedClass>, FormalChern> model;
    bool dualized = false; // tracked only for model-less symbols

    static BundleSymbol opaque(std::string name, int rank);
    static BundleSymbol with_roots(std::string name, std::vector<GradedClass> roots);
    static BundleSymbol with_formal(std::string name, std::vector<GradedClass> chern);
    // Trivial rank-r bundle: r zero roots in the given ring.
    static BundleSymbol trivial(RingPtr ring, int rank, std::string name = "O");

    bool has_roots() const { return std::holds_alternative<std::vector<GradedClass>>(model); }
    bool has_formal() const { return std::holds_alternative<FormalChern>(model); }
    const std::vector<GradedClass>& roots() const { return std::get<std::vector<GradedClass>>(model); }
    const FormalChern& formal() const { return std::get<FormalChern>(model); }
    RingPtr model_ring() const; // nullptr for model-less symbols

    // Total Chern class 1 + c_1 + ... of this symbol alone.
    GradedClass total_chern() const;
};

// A formal line-bundle twist. With a known first Chern class it folds into
// the symbol's Chern data; otherwise it is carried as an opaque tag.
struct LineTwist {
    std::string name;
    std::optional<GradedClass> c1;
};

using TwistTags = std::map<std::string, long long>; // tag -> exponent, no zeros

// Integer-weighted formal sum of (symbol, opaque-twist-tags) pairs.
// Normal form: terms sorted by structural key, multiplicities nonzero.
// Equality of symbols is content-based (rank + Chern data); names are
// display-only except for model-less symbols.
class KClass {
public:
    struct Term {
        BundleSymbol symbol;
        TwistTags twist;
        long long mult = 0;
    };

    KClass() = default;
    static KClass of(BundleSymbol symbol, long long mult = 1);
    static KClass of(BundleSymbol symbol, TwistTags twist, long long mult);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    KClass operator-() const;
    KClass& operator+=(const KClass& rhs);
    KClass& operator-=(const KClass& rhs);
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }

    std::string str() const;

private:
    void add_term(Term t);
    std::vector<Term> terms_;
};

long long rank(const KClass& k);
// Product over terms of c(symbol (x) twists)^mult; negative multiplicities via
// invert_unit. Every symbol must carry Chern data in one common ring; a ring
// may be passed explicitly to give the empty sum a home.
GradedClass total_chern(const KClass& k, RingPtr ring = nullptr);
GradedClass total_segre(const KClass& k, RingPtr ring = nullptr);
// d-th symmetric power of a rank-2 symbol with roots u1, u2: the rank-(d+1)
// class with roots { i*u1 + (d-i)*u2 }. Formal symbols are rejected (roots
// would need ring relations we do not model).
KClass sym_power(const BundleSymbol& u, int d);
KClass dual(const KClass& k);
BundleSymbol dual(const BundleSymbol& s);
KClass tensor_line(const KClass& k, const LineTwist& t);
// Normal-form equality after expanding rooted symbols to line-class
// multisets: sym_power(U, 2) equals the explicit sum of its three lines.
// Formal and model-less symbols compare whole.
bool k_equal(const KClass& k1, const KClass& k2);
// Reduced-K normal form: drops untwisted summands whose Chern data is
// trivial (trivial factors). Opt-in quotient, never applied implicitly.
KClass strip_trivial(const KClass& k);

} // namespace fsw
