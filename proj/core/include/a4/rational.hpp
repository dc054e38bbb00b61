#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace a4 {

// Arbitrary-precision rational. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q" with optional leading sign. Decimal notation is
// rejected on purpose: every input is either exact or an error.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Floor division result as a rational integer.
Rational rat_floor(const Rational& q);

// Fractional part in [0, 1).
inline Rational frac_part(const Rational& q) { return q - rat_floor(q); }

}  // namespace a4
