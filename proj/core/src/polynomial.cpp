#include "a4/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace a4 {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return monomial(1); }

Polynomial Polynomial::monomial(int k, Rational c) {
    if (k < 0) throw std::invalid_argument("monomial with negative exponent");
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s == 0) return {};
    Polynomial r = p;
    for (auto& x : r.c_) x *= s;
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    Rational inv = Rational(1) / leading();
    return inv * *this;
}

Polynomial Polynomial::subst_neg_t() const {
    Polynomial r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

Polynomial Polynomial::shift(const Rational& c) const {
    // Horner in (t + c).
    Polynomial acc;
    Polynomial lin(std::vector<Rational>{c, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = a, q;
    const int db = b.degree();
    const Rational& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rational c = r.leading() / lb;
        q += monomial(k, c);
        r -= monomial(k, c) * b;
    }
    return {q, r};
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (!unit || k == 0) out << to_string(a);
        if (k > 0) {
            if (!unit) out << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

ExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial u0(Rational(1)), u1, v0, v1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = Polynomial::divmod(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = inv * r0;
        u0 = inv * u0;
        v0 = inv * v0;
    }
    return {r0, u0, v0};
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    Polynomial f = p.monic();
    Polynomial d = f.derivative();
    Polynomial a = poly_gcd(f, d);
    Polynomial b = Polynomial::divmod(f, a).first;
    Polynomial c = Polynomial::divmod(d, a).first;
    Polynomial z = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Polynomial g = poly_gcd(b, z);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = Polynomial::divmod(b, g.degree() > 0 ? g : Polynomial(Rational(1))).first;
        z = Polynomial::divmod(z, g.degree() > 0 ? g : Polynomial(Rational(1))).first - b.derivative();
        ++mult;
    }
    return out;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    // Work with the squarefree part so each root is tried against a clean factor.
    Polynomial f = p.monic();
    Polynomial sf = Polynomial::divmod(f, poly_gcd(f, f.derivative())).first;
    // Clear denominators to get integer coefficients.
    mpz_class lcm(1);
    for (const auto& c : sf.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : sf.coeffs()) {
        Rational scaled = c * Rational(lcm);
        ic.push_back(scaled.get_num());
    }
    // Strip t^k factor.
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= ic.size()) return roots;
    mpz_class a0 = abs(ic[low]), an = abs(ic.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    for (const auto& num : divisors(a0)) {
        for (const auto& den : divisors(an)) {
            for (int sign : {1, -1}) {
                Rational r(sign * num, den);
                r.canonicalize();
                if (sf.eval(r) == 0 &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rational> root_power_sums(const Polynomial& p, int n) {
    if (p.degree() < 0) throw std::domain_error("power sums of zero polynomial");
    Polynomial m = p.monic();
    int d = m.degree();
    std::vector<Rational> s(static_cast<std::size_t>(n) + 1, Rational(0));
    s[0] = Rational(d);
    for (int k = 1; k <= n; ++k) {
        // Newton: s_k + sum_{i=1}^{k-1} c_{d-i} s_{k-i} + k c_{d-k} = 0 (c = monic coeffs).
        Rational acc(0);
        for (int i = 1; i < k; ++i) acc += m.coeff(d - i) * s[static_cast<std::size_t>(k - i)];
        Rational ck = (k <= d) ? m.coeff(d - k) : Rational(0);
        s[static_cast<std::size_t>(k)] = -acc - Rational(k) * ck;
    }
    return s;
}

Rational trace_of_mod(const Polynomial& g, const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("trace modulo a constant");
    Polynomial r = Polynomial::divmod(g, p.monic()).second;
    std::vector<Rational> s = root_power_sums(p, std::max(r.degree(), 0));
    Rational acc(0);
    for (int k = 0; k <= r.degree(); ++k) acc += r.coeff(k) * s[static_cast<std::size_t>(k)];
    return acc;
}

}  // namespace a4
