#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fsw {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace fsw
