#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace qkwall {

// Exact rational arithmetic for curve degrees, R-charges and ages.
// Floors and fractional parts must never go through floating point.
using Rat = boost::rational<long long>;

inline long long rfloor(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

inline Rat rfrac(const Rat& x) { return x - Rat(rfloor(x)); }

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

inline double rdouble(const Rat& x) {
    return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

std::string to_string(const Rat& x);

} // namespace qkwall
