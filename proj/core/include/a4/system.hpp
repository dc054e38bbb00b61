#pragma once

#include <array>
#include <string>
#include <vector>

#include "a4/laurent.hpp"
#include "a4/rational_function.hpp"

namespace a4 {

// Parameter tuple (a0, ..., a4) with sum 1. Indices are cyclic mod 5
// throughout: v[7] is v[2], v[-1] is v[4].
class ParamVec {
   public:
    explicit ParamVec(std::array<Rational, 5> values);
    static ParamVec from_strings(const std::array<std::string, 5>& texts);

    const Rational& operator[](int i) const { return v_[mod5(i)]; }
    const std::array<Rational, 5>& values() const { return v_; }

    friend bool operator==(const ParamVec& a, const ParamVec& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ParamVec& a, const ParamVec& b) { return !(a == b); }
    friend bool operator<(const ParamVec& a, const ParamVec& b) { return a.v_ < b.v_; }

    bool all_integer() const;
    std::string str() const;

    static std::size_t mod5(int i) { return static_cast<std::size_t>(((i % 5) + 5) % 5); }

   private:
    std::array<Rational, 5> v_;
};

// Candidate solution tuple (f0, ..., f4) of rational functions with sum t.
class SolutionTuple {
   public:
    explicit SolutionTuple(std::array<RationalFunction, 5> fs);

    const RationalFunction& operator[](int i) const { return f_[ParamVec::mod5(i)]; }
    const std::array<RationalFunction, 5>& values() const { return f_; }

    friend bool operator==(const SolutionTuple& a, const SolutionTuple& b) { return a.f_ == b.f_; }
    friend bool operator!=(const SolutionTuple& a, const SolutionTuple& b) { return !(a == b); }

    std::string str() const;

   private:
    std::array<RationalFunction, 5> f_;
};

// Left-hand side minus right-hand side of the i-th equation of the system:
// f_i' - f_i (f_{i+1} - f_{i+2} + f_{i+3} - f_{i+4}) - a_i. Identically zero
// exactly when equation i holds.
RationalFunction residual(int i, const SolutionTuple& f, const ParamVec& a);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;  // one entry per violated equation
};

// Checks all five equations (the normalizations are enforced by the types).
VerifyReport verify_solution(const SolutionTuple& f, const ParamVec& a);

// The symmetry t -> -t: maps solutions for a to solutions for a.
SolutionTuple negate_t(const SolutionTuple& f);

// A solution is odd when every component satisfies f_i(-t) = -f_i(t).
bool is_odd(const SolutionTuple& f);

// For tuples with f3 = f4 = 0 (required; throws std::invalid_argument
// otherwise): checks that (f0, f1, f2) solves the three-equation subsystem
// f_i' = f_i (f_{i+1} - f_{i+2}) + a_i with indices mod 3 and a3 = a4 = 0.
bool a2_embedding_check(const SolutionTuple& f, const ParamVec& a);

}  // namespace a4
