#include "a4/system.hpp"

#include <sstream>
#include <stdexcept>

namespace a4 {

ParamVec::ParamVec(std::array<Rational, 5> values) : v_(std::move(values)) {
    Rational sum(0);
    for (const auto& x : v_) sum += x;
    if (sum != 1)
        throw std::invalid_argument("parameter tuple must sum to 1, got " + to_string(sum));
}

ParamVec ParamVec::from_strings(const std::array<std::string, 5>& texts) {
    std::array<Rational, 5> v;
    for (std::size_t i = 0; i < 5; ++i) v[i] = parse_rational(texts[i]);
    return ParamVec(std::move(v));
}

bool ParamVec::all_integer() const {
    for (const auto& x : v_)
        if (!is_integer(x)) return false;
    return true;
}

std::string ParamVec::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < 5; ++i) out << (i ? ", " : "") << to_string(v_[i]);
    out << ")";
    return out.str();
}

SolutionTuple::SolutionTuple(std::array<RationalFunction, 5> fs) : f_(std::move(fs)) {
    RationalFunction sum;
    for (const auto& f : f_) sum += f;
    if (!(sum == RationalFunction::variable()))
        throw std::invalid_argument("solution tuple must sum to t, got " + sum.str());
}

std::string SolutionTuple::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < 5; ++i) out << (i ? ", " : "") << f_[i].str();
    out << ")";
    return out.str();
}

RationalFunction residual(int i, const SolutionTuple& f, const ParamVec& a) {
    RationalFunction rhs =
        f[i] * (f[i + 1] - f[i + 2] + f[i + 3] - f[i + 4]) + RationalFunction(a[i]);
    return f[i].derivative() - rhs;
}

VerifyReport verify_solution(const SolutionTuple& f, const ParamVec& a) {
    VerifyReport rep;
    for (int i = 0; i < 5; ++i) {
        RationalFunction r = residual(i, f, a);
        if (!r.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("equation " + std::to_string(i) +
                                   " fails: residual = " + r.str());
        }
    }
    return rep;
}

SolutionTuple negate_t(const SolutionTuple& f) {
    std::array<RationalFunction, 5> g;
    for (int i = 0; i < 5; ++i) g[static_cast<std::size_t>(i)] = -f[i].subst_neg_t();
    return SolutionTuple(std::move(g));
}

bool is_odd(const SolutionTuple& f) { return negate_t(f) == f; }

bool a2_embedding_check(const SolutionTuple& f, const ParamVec& a) {
    if (!f[3].is_zero() || !f[4].is_zero())
        throw std::invalid_argument("tail components f3, f4 must vanish identically");
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        RationalFunction r = f[i].derivative() - f[i] * (f[j] - f[k]) - RationalFunction(a[i]);
        if (!r.is_zero()) return false;
    }
    return true;
}

}  // namespace a4
