#pragma once

#include <map>
#include <optional>
#include <string>

#include "a4/rational_function.hpp"

namespace a4 {

// Truncated Laurent expansion, either at infinity (descending powers of t,
// exponents from `top` down to `floor`) or at a finite center (ascending
// powers of (t - center), exponents from `low` up to `top`).
struct LaurentSeries {
    bool at_infinity = true;
    Rational center;                 // meaningful when !at_infinity
    int lo = 0, hi = 0;              // inclusive exponent range covered
    std::map<int, Rational> coeffs;  // absent key in range means zero

    Rational coeff(int k) const;     // throws outside [lo, hi]
    bool covers(int k) const { return k >= lo && k <= hi; }
    std::string str() const;
};

// Expansion of f at infinity with all exponents down to `floor` (top exponent
// is determined by f itself).
LaurentSeries expand_at_infinity(const RationalFunction& f, int floor);

// Expansion of f at a finite center up to exponent `top` (the lower end is
// the pole order).
LaurentSeries expand_at_point(const RationalFunction& f, const Rational& center, int top);

}  // namespace a4
