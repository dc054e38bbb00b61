#include "a4/rational_function.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

namespace a4 {

namespace limits {
namespace {
std::atomic<int> g_degree_cap{512};
std::atomic<int> g_word_cap{64};
std::atomic<int> g_depth_cap{24};
}  // namespace
int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) { g_degree_cap.store(cap); }
int word_cap() { return g_word_cap.load(); }
void set_word_cap(int cap) { g_word_cap.store(cap); }
int depth_cap() { return g_depth_cap.load(); }
void set_depth_cap(int cap) { g_depth_cap.store(cap); }
}  // namespace limits

DegreeCapError::DegreeCapError(int deg, int cap)
    : std::runtime_error("degree " + std::to_string(deg) + " exceeds cap " +
                         std::to_string(cap)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    Rational inv = Rational(1) / den_.leading();
    num_ = inv * num_;
    den_ = inv * den_;
    int cap = limits::degree_cap();
    int deg = std::max(num_.degree(), den_.degree());
    if (deg > cap) throw DegreeCapError(deg, cap);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::subst_neg_t() const {
    return RationalFunction(num_.subst_neg_t(), den_.subst_neg_t());
}

std::optional<Rational> RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    std::ostringstream out;
    bool wrap_num = num_.degree() > 0;
    out << (wrap_num ? "(" : "") << num_.str() << (wrap_num ? ")" : "");
    // The denominator is monic, so a single-term one prints as t or t^k and
    // needs no parentheses.
    int terms = 0;
    for (const auto& c : den_.coeffs())
        if (c != 0) ++terms;
    bool wrap_den = terms > 1;
    out << "/" << (wrap_den ? "(" : "") << den_.str() << (wrap_den ? ")" : "");
    return out.str();
}

int pole_order_at(const RationalFunction& f, const Rational& c) {
    if (f.is_zero()) return 0;
    int m = 0;
    Polynomial d = f.den();
    Polynomial lin(std::vector<Rational>{-c, Rational(1)});
    while (true) {
        auto [q, r] = Polynomial::divmod(d, lin);
        if (!r.is_zero()) break;
        ++m;
        d = q;
    }
    return m;
}

Rational residue_at(const RationalFunction& f, const Rational& c) {
    int m = pole_order_at(f, c);
    if (m == 0) return Rational(0);
    // Shift the pole to 0: f(t+c) = N(t) / (t^m u(t)), u(0) != 0. The residue
    // is the t^{m-1} series coefficient of N/u, obtained by inverting u mod t^m.
    Polynomial n = f.num().shift(c);
    Polynomial d = f.den().shift(c);
    std::vector<Rational> u(d.coeffs().begin() + m, d.coeffs().end());
    std::vector<Rational> inv(static_cast<std::size_t>(m), Rational(0));
    inv[0] = Rational(1) / u[0];
    for (int k = 1; k < m; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(u.size()); ++j)
            acc += u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -acc / u[0];
    }
    Rational res(0);
    for (int j = 0; j < m; ++j) res += n.coeff(j) * inv[static_cast<std::size_t>(m - 1 - j)];
    return res;
}

Rational residue_at_infinity(const RationalFunction& f) {
    // The polynomial part carries no t^{-1} term; with a monic denominator of
    // degree d the t^{-1} coefficient of R/D is the degree d-1 coefficient of R.
    Polynomial r = Polynomial::divmod(f.num(), f.den()).second;
    return -r.coeff(f.den().degree() - 1);
}

namespace {
int factor_multiplicity(const Polynomial& den, const Polynomial& p, Polynomial* cofactor) {
    int m = 0;
    Polynomial d = den;
    while (true) {
        auto [q, r] = Polynomial::divmod(d, p);
        if (!r.is_zero()) break;
        ++m;
        d = q;
    }
    if (cofactor) *cofactor = d;
    return m;
}
}  // namespace

Rational residue_sum_over_factor(const RationalFunction& f, const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("residue sum over a constant factor");
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw std::domain_error("residue sum over a non-squarefree factor");
    Polynomial cof;
    int m = factor_multiplicity(f.den(), p, &cof);
    if (m == 0) return Rational(0);
    if (m > 1) throw std::domain_error("pole of order > 1 along the factor");
    // At a simple root c of the denominator, Res_c = N(c)/D'(c).
    Polynomial dprime = f.den().derivative();
    auto [g, u, v] = poly_ext_gcd(Polynomial::divmod(dprime, p.monic()).second, p.monic());
    if (g.degree() != 0)
        throw std::domain_error("denominator derivative not invertible modulo the factor");
    Polynomial inv = (Rational(1) / g.coeff(0)) * u;
    return trace_of_mod(Polynomial::divmod(f.num() * inv, p.monic()).second, p);
}

Rational residue_sum_over_factor_any_order(const RationalFunction& f, const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("residue sum over a constant factor");
    Polynomial pm = p.monic();
    Polynomial cof;
    int m = factor_multiplicity(f.den(), pm, &cof);
    if (m == 0) return Rational(0);
    // Split N/(p^m q) = B/p^m + (rest): B = N q^{-1} mod p^m. The residue sum
    // over the roots of p is then the t^{-1} coefficient of B/p^m at infinity.
    Polynomial pk(Rational(1));
    for (int i = 0; i < m; ++i) pk = pk * pm;
    auto [g, u, v] = poly_ext_gcd(Polynomial::divmod(cof, pk).second, pk);
    if (g.degree() != 0) throw std::domain_error("denominator factors not coprime");
    Polynomial qinv = (Rational(1) / g.coeff(0)) * u;
    Polynomial b = Polynomial::divmod(f.num() * qinv, pk).second;
    return b.coeff(pk.degree() - 1);
}

std::vector<std::pair<Polynomial, int>> denominator_factors(const RationalFunction& f) {
    std::vector<std::pair<Polynomial, int>> out;
    for (const auto& [p, mult] : squarefree_decomposition(f.den())) {
        Polynomial rest = p;
        for (const auto& r : rational_roots(p)) {
            Polynomial lin(std::vector<Rational>{-r, Rational(1)});
            rest = Polynomial::divmod(rest, lin).first;
            out.emplace_back(lin, mult);
        }
        if (rest.degree() > 0) out.emplace_back(rest, mult);
    }
    return out;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

namespace {

class Parser {
   public:
    explicit Parser(const std::string& s) : s_(s) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

   private:
    RationalFunction expr() {
        RationalFunction r = term();
        while (true) {
            skip_ws();
            if (peek() == '+') { ++pos_; r += term(); }
            else if (peek() == '-') { ++pos_; r -= term(); }
            else return r;
        }
    }

    RationalFunction term() {
        RationalFunction r = unary();
        while (true) {
            skip_ws();
            if (peek() == '*') { ++pos_; r *= unary(); }
            else if (peek() == '/') {
                std::size_t at = pos_++;
                RationalFunction d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r = r / d;
            } else return r;
        }
    }

    RationalFunction unary() {
        skip_ws();
        if (peek() == '-') { ++pos_; return -unary(); }
        if (peek() == '+') { ++pos_; return unary(); }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        skip_ws();
        if (peek() != '^') return base;
        std::size_t at = ++pos_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        long e = integer_literal();
        RationalFunction r(Rational(1));
        for (long i = 0; i < e; ++i) r *= base;
        if (neg) {
            if (base.is_zero()) throw ParseError("zero raised to a negative power", at);
            r = RationalFunction(Rational(1)) / r;
        }
        return r;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            std::size_t at = pos_++;
            RationalFunction r = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced parenthesis", at);
            ++pos_;
            return r;
        }
        if (c == 't') { ++pos_; return RationalFunction::variable(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            if (pos_ < s_.size() && s_[pos_] == '.')
                throw ParseError("decimal literals are not accepted", pos_);
            Rational v;
            v.set_str(digits, 10);
            return RationalFunction(v);
        }
        if (c == '.') throw ParseError("decimal literals are not accepted", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    long integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected an integer", pos_);
        if (pos_ < s_.size() && s_[pos_] == '.')
            throw ParseError("decimal literals are not accepted", pos_);
        try {
            return std::stol(digits);
        } catch (const std::out_of_range&) {
            throw ParseError("integer literal out of range", start);
        }
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace a4
