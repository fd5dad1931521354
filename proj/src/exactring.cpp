#include "fsw/exactring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fsw {

RingPresentation::RingPresentation(std::vector<Generator> generators, int truncation)
    : generators_(std::move(generators)), truncation_(truncation) {
    if (truncation_ < 0)
        throw Error("ring truncation must be non-negative");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.degree < 1)
            throw Error("generator '" + g.name + "' must have degree >= 1");
        if (!seen.insert(g.name).second)
            throw Error("duplicate generator name '" + g.name + "'");
    }
}

int RingPresentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int RingPresentation::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += static_cast<int>(m[i]) * generators_[i].degree;
    return d;
}

std::string RingPresentation::monomial_string(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << "*";
        os << generators_[i].name;
        if (m[i] > 1)
            os << "^" << m[i];
        first = false;
    }
    return first ? "1" : os.str();
}

RingPtr make_ring(std::vector<Generator> generators, int truncation) {
    return std::make_shared<const RingPresentation>(std::move(generators), truncation);
}

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a != b)
        throw Error("ring presentation mismatch");
}

} // namespace

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_)
        throw Error("null ring presentation");
}

GradedClass GradedClass::constant(RingPtr ring, const Rational& c) {
    GradedClass r(std::move(ring));
    if (c != 0)
        r.terms_.emplace(Monomial(r.ring_->size(), 0), c);
    return r;
}

GradedClass GradedClass::generator(RingPtr ring, std::string_view name) {
    GradedClass r(std::move(ring));
    int i = r.ring_->index_of(name);
    if (i < 0)
        throw Error("unknown generator '" + std::string(name) + "'");
    Monomial m(r.ring_->size(), 0);
    m[static_cast<std::size_t>(i)] = 1;
    if (r.ring_->monomial_degree(m) <= r.ring_->truncation())
        r.terms_.emplace(std::move(m), 1);
    return r;
}

GradedClass GradedClass::monomial_term(RingPtr ring, Monomial m, const Rational& c) {
    GradedClass r(std::move(ring));
    if (m.size() != r.ring_->size())
        throw Error("monomial arity mismatch");
    r.insert_term(m, c);
    return r;
}

bool GradedClass::is_one() const {
    return terms_.size() == 1 && ring_->monomial_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->second == 1;
}

Rational GradedClass::constant_term() const {
    Monomial zero(ring_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool GradedClass::homogeneous(int& deg) const {
    if (terms_.empty()) {
        deg = 0;
        return true;
    }
    deg = ring_->monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ring_->monomial_degree(m) != deg)
            return false;
    return true;
}

void GradedClass::insert_term(const Monomial& m, const Rational& c) {
    if (c == 0 || ring_->monomial_degree(m) > ring_->truncation())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedClass GradedClass::operator-() const {
    GradedClass r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

GradedClass& GradedClass::operator+=(const GradedClass& rhs) {
    require_same_ring(ring_, rhs.ring_);
    for (const auto& [m, c] : rhs.terms_)
        insert_term(m, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& rhs) {
    require_same_ring(ring_, rhs.ring_);
    for (const auto& [m, c] : rhs.terms_)
        insert_term(m, -c);
    return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    require_same_ring(a.ring_, b.ring_);
    GradedClass r(a.ring_);
    const int D = a.ring_->truncation();
    for (const auto& [ma, ca] : a.terms_) {
        const int da = a.ring_->monomial_degree(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + a.ring_->monomial_degree(mb) > D)
                continue;
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] += mb[i];
            r.insert_term(m, ca * cb);
        }
    }
    return r;
}

GradedClass& GradedClass::operator*=(const GradedClass& rhs) {
    *this = *this * rhs;
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

bool GradedClass::operator==(const GradedClass& rhs) const {
    return ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

std::string GradedClass::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Rational a = abs(c);
        const std::string mono = ring_->monomial_string(m);
        if (mono == "1")
            os << to_fraction_string(a);
        else if (a == 1)
            os << mono;
        else
            os << to_fraction_string(a) << "*" << mono;
        first = false;
    }
    return os.str();
}

GradedClass add(const GradedClass& a, const GradedClass& b) { return a + b; }

GradedClass mul(const GradedClass& a, const GradedClass& b) { return a * b; }

GradedClass invert_unit(const GradedClass& a) {
    if (a.constant_term() != 1)
        throw Error("invert_unit: constant term must be 1");
    const int D = a.ring()->truncation();
    GradedClass x = a - GradedClass::one(a.ring()); // positive-degree part
    GradedClass result = GradedClass::one(a.ring());
    GradedClass pow = GradedClass::one(a.ring());
    for (int j = 1; j <= D; ++j) {
        pow = pow * x;
        if (pow.is_zero())
            break;
        result += (j % 2 == 1) ? -pow : pow;
    }
    return result;
}

GradedClass grade(const GradedClass& a, int d) {
    if (d < 0 || d > a.ring()->truncation())
        throw Error("grade: degree out of range");
    GradedClass r(a.ring());
    for (const auto& [m, c] : a.terms())
        if (a.ring()->monomial_degree(m) == d)
            r.terms_.emplace(m, c);
    return r;
}

} // namespace fsw
