#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a4/polynomial.hpp"

namespace a4 {

// Tunable limits. Setters affect subsequent operations; defaults are generous
// for every workload in this repo.
namespace limits {
int degree_cap();        // max degree of any normalized numerator/denominator
void set_degree_cap(int cap);
int word_cap();          // max generator-word length emitted by the reducer
void set_word_cap(int cap);
int depth_cap();         // max breadth-first search depth in the constructor
void set_depth_cap(int cap);
}  // namespace limits

struct DegreeCapError : std::runtime_error {
    explicit DegreeCapError(int deg, int cap);
};

// Quotient of polynomials in canonical form: gcd(num, den) = 1, den monic.
// The zero function is 0/1.
class RationalFunction {
   public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);  // normalizes
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const;
    RationalFunction subst_neg_t() const;               // f(-t)
    std::optional<Rational> eval(const Rational& x) const;  // nullopt at a pole

    std::string str() const;

   private:
    void normalize();
    Polynomial num_, den_;
};

// Order of the pole of f at c (0 if regular there).
int pole_order_at(const RationalFunction& f, const Rational& c);

// Residue at a finite point. Works for poles of any order.
Rational residue_at(const RationalFunction& f, const Rational& c);

// Residue at infinity: -[coefficient of t^{-1}] of the expansion at infinity,
// so that the sum of all residues (finite and infinite) vanishes.
Rational residue_at_infinity(const RationalFunction& f);

// Sum of residues of f over the roots of p. p must be squarefree, of positive
// degree, and every root must be at most a simple pole of f (checked; throws
// std::domain_error otherwise). Computed as a trace of num * (den')^{-1} mod p.
Rational residue_sum_over_factor(const RationalFunction& f, const Polynomial& p);

// Same sum without the simple-pole restriction, via partial fractions: the
// component of f with denominator p^m is isolated and its t^{-1} coefficient
// at infinity is read off.
Rational residue_sum_over_factor_any_order(const RationalFunction& f, const Polynomial& p);

// Squarefree monic factors of the denominator with multiplicities.
std::vector<std::pair<Polynomial, int>> denominator_factors(const RationalFunction& f);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

// Parses an expression in t built from integer literals, + - * / ^ and
// parentheses, e.g. "(t^2 - 1)/(3*t)". Reports the offending offset on error.
RationalFunction parse_rational_function(const std::string& text);

}  // namespace a4
