#pragma once

#include "fsw/error.hpp"

#include <string>

namespace fsw {

// Divisor class a*F + b*Cminus on the Hirzebruch surface F_n, where F is the
// fiber class (F^2 = 0) and Cminus the section with Cminus^2 = -n.
struct FnDivisor {
    int n = 1;
    long long a = 0;
    long long b = 0;

    friend FnDivisor operator-(const FnDivisor& x, const FnDivisor& y);
    friend bool operator==(const FnDivisor& x, const FnDivisor& y) = default;
    std::string str() const;
};

long long intersect(const FnDivisor& d1, const FnDivisor& d2);
FnDivisor canonical(int n);
bool is_effective(const FnDivisor& d);
// Count of sections: pushforward to the base P^1 gives
// sum_{j=0}^{b} h0(P^1, O(a - j n)). Equals the lattice-point count
// #{(i,j) : 0 <= j <= b, 0 <= i <= a - j n}.
long long h0(const FnDivisor& d);
long long h2(const FnDivisor& d); // Serre: h0(K - d)
long long chi(const FnDivisor& d); // 1 + (d.d - d.K)/2
long long h1(const FnDivisor& d);  // h0 + h2 - chi, must be >= 0

// Result of the twist chooser: an even b with h0(delta) = h2(delta) = 0 for
// delta = ((a-n+bn)/2 - 1) F + (b/2 - 1) Cminus. `recipe_ok` reports whether
// the closed-form recipe already verified; when it did not, `b` comes from a
// bounded search and `warning` carries the discrepancy.
struct ChooseB {
    long long b = 0;
    FnDivisor delta;
    bool recipe_ok = true;
    std::string warning;
};

ChooseB choose_b(long long a, int n); // pre: a + n even, n >= 1

} // namespace fsw
