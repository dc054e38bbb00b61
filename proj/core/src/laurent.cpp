#include "a4/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace a4 {

Rational LaurentSeries::coeff(int k) const {
    if (!covers(k))
        throw std::out_of_range("series coefficient " + std::to_string(k) +
                                " outside covered range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
}

std::string LaurentSeries::str() const {
    std::ostringstream out;
    bool first = true;
    std::string var = at_infinity ? "t"
                      : (center == 0 ? "t" : "(t - " + to_string(center) + ")");
    auto emit = [&](int k, const Rational& c) {
        if (c == 0) return;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) out << to_string(a);
        if (k != 0) {
            if (a != 1) out << "*";
            out << var;
            if (k != 1) out << "^" << k;
        }
    };
    if (at_infinity)
        for (int k = hi; k >= lo; --k) emit(k, coeff(k));
    else
        for (int k = lo; k <= hi; ++k) emit(k, coeff(k));
    if (first) out << "0";
    out << " + O(" << var << "^" << (at_infinity ? lo - 1 : hi + 1) << ")";
    return out.str();
}

LaurentSeries expand_at_infinity(const RationalFunction& f, int floor) {
    auto [q, r] = Polynomial::divmod(f.num(), f.den());
    LaurentSeries s;
    s.at_infinity = true;
    s.hi = std::max(q.degree(), 0);
    s.lo = floor;
    for (int k = 0; k <= q.degree(); ++k)
        if (q.coeff(k) != 0) s.coeffs[k] = q.coeff(k);
    // r/den with deg r < deg den: long-divide in descending powers. Write
    // den = t^d (1 + u), u in t^{-1}; coefficients follow by recursion.
    int d = f.den().degree();
    if (d > 0 && !r.is_zero()) {
        // a_{-j} for j >= 1: r.coeff(d - j) = sum_{i<j} a_{-i} den.coeff(d - (j - i)).
        int depth = -floor;  // need exponents down to floor = -depth
        std::map<int, Rational> a;  // key j >= 1 -> coefficient of t^{-j}
        for (int j = 1; j <= depth; ++j) {
            Rational acc = r.coeff(d - j);
            for (int i = 1; i < j; ++i) acc -= a[i] * f.den().coeff(d - (j - i));
            a[j] = acc;  // den is monic: den.coeff(d) = 1
            if (acc != 0) s.coeffs[-j] = acc;
        }
    }
    return s;
}

LaurentSeries expand_at_point(const RationalFunction& f, const Rational& center, int top) {
    LaurentSeries s;
    s.at_infinity = false;
    s.center = center;
    // Shift so the center is 0, then divide out t^m and invert the unit part.
    Polynomial n = f.num().shift(center);
    Polynomial d = f.den().shift(center);
    int m = 0;
    while (d.coeff(m) == 0 && m <= d.degree()) ++m;
    s.lo = -m;
    s.hi = top;
    if (f.is_zero()) { s.lo = 0; return s; }
    int terms = top + m + 1;  // series coefficients of n / (d / t^m) needed
    if (terms <= 0) { s.lo = top; return s; }
    std::vector<Rational> u(static_cast<std::size_t>(terms), Rational(0));
    for (int k = 0; k < terms; ++k) u[static_cast<std::size_t>(k)] = d.coeff(m + k);
    std::vector<Rational> w(static_cast<std::size_t>(terms), Rational(0));
    for (int k = 0; k < terms; ++k) {
        Rational acc = n.coeff(k);
        for (int i = 1; i <= k; ++i) acc -= u[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(k - i)];
        w[static_cast<std::size_t>(k)] = acc / u[0];
    }
    for (int k = 0; k < terms; ++k)
        if (w[static_cast<std::size_t>(k)] != 0) s.coeffs[k - m] = w[static_cast<std::size_t>(k)];
    return s;
}

}  // namespace a4
