#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a4/rational.hpp"

namespace a4 {

// Dense univariate polynomial over the rationals, in the indeterminate t.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);  // coeffs[k] multiplies t^k

    static Polynomial variable();              // t
    static Polynomial monomial(int k, Rational c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int k) const;        // 0 outside the stored range
    const Rational& leading() const;           // throws on zero
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;                  // throws on zero
    Polynomial subst_neg_t() const;            // p(-t)
    Polynomial shift(const Rational& c) const; // p(t + c)

    // Division with remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    std::string str() const;                   // e.g. "t^2 - 1/3*t + 2"

   private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic unless zero.
struct ExtGcd {
    Polynomial g, u, v;
};
ExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b);

// Yun's algorithm: squarefree decomposition of p (up to a constant) as
// a list of (factor, multiplicity) with pairwise-coprime squarefree monic
// factors of positive degree.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Rational roots of p (each listed once), found by splitting off linear
// factors t - r with r = num/den dividing the integerized constant/leading
// coefficients.
std::vector<Rational> rational_roots(const Polynomial& p);

// Newton power sums s_0..s_n of the roots of monic p (s_0 = deg p).
std::vector<Rational> root_power_sums(const Polynomial& p, int n);

// Sum of g over the roots of squarefree monic p (counted once each),
// computed as a trace: reduce g mod p, then pair coefficients with power sums.
Rational trace_of_mod(const Polynomial& g, const Polynomial& p);

}  // namespace a4
