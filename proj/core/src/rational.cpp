#include "a4/rational.hpp"

#include <cctype>

namespace a4 {

Rational parse_rational(const std::string& text) {
    // Strict grammar: [+-]digits[/digits]. mpq_class's own parser is more
    // permissive (whitespace, bases), so validate by hand first.
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("invalid rational literal: '" + text + "'");
    };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) throw bad();
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != text.size()) throw bad();
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw bad();
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rat_floor(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

}  // namespace a4
