#include <doctest.h>

#include <random>

#include "a4/backlund.hpp"
#include "a4/laurent_analysis.hpp"

using namespace a4;

namespace {

ParamVec pv(const std::array<std::string, 5>& a) { return ParamVec::from_strings(a); }

SolutionTuple st(const std::array<std::string, 5>& f) {
    std::array<RationalFunction, 5> fs;
    for (int i = 0; i < 5; ++i) fs[static_cast<std::size_t>(i)] = parse_rational_function(f[static_cast<std::size_t>(i)]);
    return SolutionTuple(fs);
}

// Verified sample solutions, one per pole kind at infinity.
const ParamVec kA1Params = pv({"-1", "1", "0", "0", "1"});
const SolutionTuple kA1Sol = st({"t", "1/t", "0", "0", "-1/t"});
const ParamVec kA2Params = pv({"1", "-1", "1", "1", "-1"});
const SolutionTuple kA2Sol = st({"-t", "1/t", "t", "t", "-1/t"});
const ParamVec kBParams = pv({"1/3", "1/3", "1/3", "0", "0"});
const SolutionTuple kBSol = st({"t/3", "t/3", "t/3", "0", "0"});
const ParamVec kCParams = pv({"1/5", "1/5", "1/5", "1/5", "1/5"});
const SolutionTuple kCSol = st({"t/5", "t/5", "t/5", "t/5", "t/5"});

}  // namespace

TEST_CASE("pole kinds at infinity are recognized") {
    CHECK(verify_solution(kA1Sol, kA1Params).ok);
    CHECK(verify_solution(kA2Sol, kA2Params).ok);
    CHECK(classify_infinity(kA1Sol) == InfinityType{InfinityKind::A1, 0});
    CHECK(classify_infinity(kA2Sol) == InfinityType{InfinityKind::A2, 2});
    CHECK(classify_infinity(kBSol) == InfinityType{InfinityKind::B, 0});
    CHECK(classify_infinity(kCSol) == InfinityType{InfinityKind::C, 0});
    CHECK_THROWS_AS(classify_infinity(st({"t/2", "t/2", "0", "0", "0"})), std::domain_error);
}

TEST_CASE("type names round-trip") {
    CHECK(InfinityType{InfinityKind::A1, 3}.str() == "A1:3");
    CHECK(InfinityType{InfinityKind::C, 0}.str() == "C");
    CHECK(parse_infinity_type("A2:4") == InfinityType{InfinityKind::A2, 4});
    CHECK(parse_infinity_type("C") == InfinityType{InfinityKind::C, 0});
    CHECK_FALSE(parse_infinity_type("D:0").has_value());
}

TEST_CASE("predicted profiles match the actual expansions") {
    struct Case {
        const ParamVec& a;
        const SolutionTuple& f;
    };
    for (const Case& c : {Case{kA1Params, kA1Sol}, Case{kA2Params, kA2Sol},
                          Case{kBParams, kBSol}, Case{kCParams, kCSol}}) {
        InfinityType type = classify_infinity(c.f);
        InfinityProfile p = predicted_profile(type, c.a);
        for (int i = 0; i < 5; ++i) {
            LaurentSeries s = expand_at_infinity(c.f[i], -1);
            CHECK(p.leading[static_cast<std::size_t>(i)] == (s.covers(1) ? s.coeff(1) : Rational(0)));
            CHECK(p.subleading[static_cast<std::size_t>(i)] == s.coeff(-1));
        }
    }
}

TEST_CASE("predicted profiles stay faithful along random transport") {
    ParamVec a = kCParams;
    SolutionTuple f = kCSol;
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> pick(0, 6);
    for (int k = 0; k < 30; ++k) {
        JointState next = apply_gen(static_cast<Gen>(pick(rng)), a, f);
        a = next.params;
        f = next.sol;
        InfinityProfile p = predicted_profile(classify_infinity(f), a);
        for (int i = 0; i < 5; ++i) {
            LaurentSeries s = expand_at_infinity(f[i], -1);
            CHECK(p.leading[static_cast<std::size_t>(i)] == (s.covers(1) ? s.coeff(1) : Rational(0)));
            CHECK(p.subleading[static_cast<std::size_t>(i)] == s.coeff(-1));
        }
    }
}

TEST_CASE("the recurrence reproduces closed-form expansions") {
    struct Case {
        const ParamVec& a;
        const SolutionTuple& f;
    };
    for (const Case& c : {Case{kA1Params, kA1Sol}, Case{kA2Params, kA2Sol},
                          Case{kBParams, kBSol}, Case{kCParams, kCSol}}) {
        auto series = recurrence_expand(classify_infinity(c.f), c.a, -12);
        for (int i = 0; i < 5; ++i) {
            LaurentSeries direct = expand_at_infinity(c.f[i], -12);
            for (int e = 1; e >= -12; --e) {
                Rational lhs = series[static_cast<std::size_t>(i)].covers(e)
                                   ? series[static_cast<std::size_t>(i)].coeff(e)
                                   : Rational(0);
                Rational rhs = direct.covers(e) ? direct.coeff(e) : Rational(0);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("the recurrence works from parameters alone") {
    // Transport produces a solution with higher-degree components; the
    // recurrence, fed only the pole kind and the parameters, must agree.
    ParamVec a = kBParams;
    SolutionTuple f = kBSol;
    for (Gen g : {Gen::S2, Gen::S3, Gen::S1, Gen::Pi, Gen::S0}) {
        JointState next = apply_gen(g, a, f);
        a = next.params;
        f = next.sol;
    }
    REQUIRE(verify_solution(f, a).ok);
    auto series = recurrence_expand(classify_infinity(f), a, -10);
    for (int i = 0; i < 5; ++i) {
        LaurentSeries direct = expand_at_infinity(f[i], -10);
        for (int e = 1; e >= -10; --e) {
            Rational lhs = series[static_cast<std::size_t>(i)].covers(e)
                               ? series[static_cast<std::size_t>(i)].coeff(e)
                               : Rational(0);
            Rational rhs = direct.covers(e) ? direct.coeff(e) : Rational(0);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("finite pole audit on pole-free tuples") {
    PoleAuditReport r = finite_pole_audit(kBSol, kBParams);
    CHECK(r.ok);
    CHECK(r.poles.empty());
}

TEST_CASE("finite pole audit finds and validates a pole at the origin") {
    PoleAuditReport r = finite_pole_audit(kA1Sol, kA1Params);
    REQUIRE(r.ok);
    REQUIRE(r.poles.size() == 1);
    const PoleProfile& p = r.poles[0];
    REQUIRE(std::holds_alternative<Rational>(p.location));
    CHECK(std::get<Rational>(p.location) == 0);
    CHECK(p.residues == std::array<Rational, 5>{0, 1, 0, 0, -1});
}

TEST_CASE("finite pole audit under transport keeps passing") {
    ParamVec a = kCParams;
    SolutionTuple f = kCSol;
    for (Gen g : {Gen::S0, Gen::S2, Gen::S4, Gen::S1, Gen::Pi, Gen::S3, Gen::S0}) {
        JointState next = apply_gen(g, a, f);
        a = next.params;
        f = next.sol;
        REQUIRE(verify_solution(f, a).ok);
        PoleAuditReport r = finite_pole_audit(f, a);
        for (const auto& msg : r.failures) MESSAGE(msg);
        CHECK(r.ok);
    }
}
