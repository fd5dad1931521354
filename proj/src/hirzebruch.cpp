#include "fsw/hirzebruch.hpp"

#include <cstdlib>
#include <sstream>

namespace fsw {

namespace {

void require_index(int n) {
    if (n < 1)
        throw Error("Hirzebruch index n must be >= 1");
}

FnDivisor twist_divisor(long long a, int n, long long b) {
    return FnDivisor{n, (a - n + b * n) / 2 - 1, b / 2 - 1};
}

} // namespace

FnDivisor operator-(const FnDivisor& x, const FnDivisor& y) {
    if (x.n != y.n)
        throw Error("FnDivisor: index mismatch");
    return FnDivisor{x.n, x.a - y.a, x.b - y.b};
}

std::string FnDivisor::str() const {
    std::ostringstream os;
    os << a << "F" << (b < 0 ? " - " : " + ") << std::llabs(b) << "C-";
    return os.str();
}

long long intersect(const FnDivisor& d1, const FnDivisor& d2) {
    require_index(d1.n);
    if (d1.n != d2.n)
        throw Error("intersect: index mismatch");
    return d1.a * d2.b + d2.a * d1.b - static_cast<long long>(d1.n) * d1.b * d2.b;
}

FnDivisor canonical(int n) {
    require_index(n);
    return FnDivisor{n, -(static_cast<long long>(n) + 2), -2};
}

bool is_effective(const FnDivisor& d) {
    require_index(d.n);
    return d.a >= 0 && d.b >= 0;
}

long long h0(const FnDivisor& d) {
    require_index(d.n);
    if (d.b < 0)
        return 0;
    long long total = 0;
    for (long long j = 0; j <= d.b; ++j) {
        long long c = d.a - j * d.n + 1;
        if (c > 0)
            total += c;
    }
    return total;
}

long long h2(const FnDivisor& d) { return h0(canonical(d.n) - d); }

long long chi(const FnDivisor& d) {
    require_index(d.n);
    long long num = intersect(d, d) - intersect(d, canonical(d.n));
    if (num % 2 != 0)
        throw Error("chi: parity violation (internal error)");
    return 1 + num / 2;
}

long long h1(const FnDivisor& d) {
    long long v = h0(d) + h2(d) - chi(d);
    if (v < 0)
        throw Error("h1: negative value; h0 model and chi are inconsistent");
    return v;
}

ChooseB choose_b(long long a, int n) {
    require_index(n);
    if ((a + n) % 2 != 0)
        throw Error("choose_b: a + n must be even");

    // Recipe: b = 0 when (a-n)/2 - 1 < 0, else the unique non-positive even b
    // with 0 <= (a+n+bn)/2 - 1 < n.
    long long recipe_b = 0;
    if ((a - n) / 2 - 1 >= 0) {
        bool found = false;
        for (long long b = 0; b >= -2 * (std::llabs(a) + n + 2); b -= 2) {
            long long w = (a + n + b * n) / 2 - 1;
            if (w >= 0 && w < n) {
                recipe_b = b;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error("choose_b: recipe window empty (internal error)");
    }

    ChooseB result;
    result.b = recipe_b;
    result.delta = twist_divisor(a, n, recipe_b);
    if (h0(result.delta) == 0 && h2(result.delta) == 0)
        return result;

    // The recipe failed verification: fall back to a bounded search and
    // surface the discrepancy.
    result.recipe_ok = false;
    for (long long b = 0; b >= -2 * (std::llabs(a) + n + 2); b -= 2) {
        FnDivisor delta = twist_divisor(a, n, b);
        if (h0(delta) == 0 && h2(delta) == 0) {
            result.b = b;
            result.delta = delta;
            std::ostringstream os;
            os << "recipe b=" << recipe_b << " fails h0/h2 vanishing for a=" << a << ", n=" << n
               << "; search found b=" << b;
            result.warning = os.str();
            return result;
        }
    }
    throw Error("choose_b: no even b in bound yields h0 = h2 = 0 (model inconsistency)");
}

} // namespace fsw
