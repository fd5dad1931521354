#pragma once

#include "fsw/error.hpp"
#include "fsw/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fsw {

struct Generator {
    std::string name;
    int degree = 1; // cohomological degree in complex units, >= 1
};

// Exponent vector over the ring's generator list.
using Monomial = std::vector<unsigned>;

// Immutable presentation of a truncated graded polynomial ring: all terms of
// total weighted degree > truncation are zero.
class RingPresentation {
public:
    RingPresentation(std::vector<Generator> generators, int truncation);

    int truncation() const { return truncation_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }

    // Index of a generator by name, -1 if absent.
    int index_of(std::string_view name) const;
    int monomial_degree(const Monomial& m) const;
    std::string monomial_string(const Monomial& m) const;

private:
    std::vector<Generator> generators_;
    int truncation_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(std::vector<Generator> generators, int truncation);

// Element of a truncated graded ring with exact rational coefficients.
// Canonical sparse form: sorted monomials, no zero coefficients, nothing
// above the truncation. Equality is structural.
class GradedClass {
public:
    explicit GradedClass(RingPtr ring); // zero
    static GradedClass constant(RingPtr ring, const Rational& c);
    static GradedClass one(RingPtr ring) { return constant(std::move(ring), 1); }
    static GradedClass generator(RingPtr ring, std::string_view name);
    static GradedClass monomial_term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    Rational constant_term() const;

    // True when every term has the same degree d (the zero class is
    // homogeneous of every degree). Returns that degree through `deg`.
    bool homogeneous(int& deg) const;

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& rhs);
    GradedClass& operator-=(const GradedClass& rhs);
    GradedClass& operator*=(const GradedClass& rhs);
    GradedClass& operator*=(const Rational& c);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }
    friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }

    bool operator==(const GradedClass& rhs) const;
    bool operator!=(const GradedClass& rhs) const { return !(*this == rhs); }
    // Arbitrary total order on classes of one ring (for canonical sorting).
    bool operator<(const GradedClass& rhs) const { return terms_ < rhs.terms_; }

    std::string str() const;

private:
    void insert_term(const Monomial& m, const Rational& c);
    friend GradedClass grade(const GradedClass&, int);

    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

GradedClass add(const GradedClass& a, const GradedClass& b);
GradedClass mul(const GradedClass& a, const GradedClass& b);
// Multiplicative inverse of a unit (constant term 1), via the Neumann series
// of the positive-degree part. mul(a, invert_unit(a)) == 1 exactly.
GradedClass invert_unit(const GradedClass& a);
// Homogeneous degree-d component, 0 <= d <= truncation.
GradedClass grade(const GradedClass& a, int d);

} // namespace fsw
