#include <doctest.h>

#include <random>

#include "a4/constructor.hpp"

using namespace a4;

namespace {

ParamVec pv(const std::array<std::string, 5>& a) { return ParamVec::from_strings(a); }

SolutionTuple st(const std::array<std::string, 5>& f) {
    std::array<RationalFunction, 5> fs;
    for (int i = 0; i < 5; ++i) fs[static_cast<std::size_t>(i)] = parse_rational_function(f[static_cast<std::size_t>(i)]);
    return SolutionTuple(fs);
}

}  // namespace

TEST_CASE("seed catalog") {
    for (SolvabilityClass c :
         {SolvabilityClass::Class1, SolvabilityClass::Class2, SolvabilityClass::Class3}) {
        auto [a, f] = seed_solution(c);
        CHECK(verify_solution(f, a).ok);
    }
    CHECK(seed_solution(SolvabilityClass::Class1).second == st({"t", "0", "0", "0", "0"}));
    CHECK(seed_solution(SolvabilityClass::Class2).second == st({"t/3", "t/3", "t/3", "0", "0"}));
    CHECK(seed_solution(SolvabilityClass::Class3).second ==
          st({"t/5", "t/5", "t/5", "t/5", "t/5"}));
}

TEST_CASE("construction of the documented examples") {
    auto r = construct(pv({"1", "0", "0", "0", "0"}));
    REQUIRE(r.has_value());
    CHECK(r->sol == st({"t", "0", "0", "0", "0"}));
    CHECK(r->label == SolvabilityClass::Class1);

    r = construct(pv({"-1", "1", "0", "0", "1"}));
    REQUIRE(r.has_value());
    CHECK(r->sol == st({"t", "1/t", "0", "0", "-1/t"}));
    CHECK(verify_solution(r->sol, r->params).ok);

    CHECK_FALSE(construct(pv({"1/2", "1/2", "0", "0", "0"})).has_value());
}

TEST_CASE("construction is deterministic") {
    ParamVec a = pv({"4/3", "1/3", "-2/3", "0", "0"});
    auto r1 = construct(a);
    auto r2 = construct(a);
    REQUIRE(r1.has_value());
    REQUIRE(r2.has_value());
    CHECK(r1->sol == r2->sol);
    CHECK(r1->word == r2->word);
}

TEST_CASE("round-trip against the joint action") {
    // Random words applied to each seed; construct must return the exact
    // transported tuple (uniqueness of the rational solution).
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> pick(0, 6), len(1, 6);
    for (SolvabilityClass c :
         {SolvabilityClass::Class1, SolvabilityClass::Class2, SolvabilityClass::Class3}) {
        auto [a0, f0] = seed_solution(c);
        for (int k = 0; k < 12; ++k) {
            ParamVec a = a0;
            SolutionTuple f = f0;
            int n = len(rng);
            for (int j = 0; j < n; ++j) {
                JointState next = apply_gen(static_cast<Gen>(pick(rng)), a, f);
                a = next.params;
                f = next.sol;
            }
            auto r = construct(a);
            REQUIRE(r.has_value());
            CHECK(r->sol == f);
        }
    }
}

TEST_CASE("full audit on representative points") {
    for (const auto& a : {pv({"1/3", "1/3", "1/3", "0", "0"}), pv({"-1", "1", "0", "0", "1"}),
                          pv({"1/5", "1/5", "1/5", "1/5", "1/5"}),
                          pv({"1/3", "1/3", "0", "0", "1/3"})}) {
        AuditReport rep = transport_audit(a);
        for (const AuditEntry& e : rep.entries)
            if (!e.ok) MESSAGE(e.name, ": ", e.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("caps report inconclusive instead of nonexistence") {
    int old_depth = limits::depth_cap();
    int old_word = limits::word_cap();
    limits::set_depth_cap(1);
    limits::set_word_cap(2);
    // This point needs several steps from its seed.
    CHECK_THROWS_AS(construct(pv({"7/3", "1/3", "-5/3", "0", "0"})), std::exception);
    limits::set_depth_cap(old_depth);
    limits::set_word_cap(old_word);
    auto r = construct(pv({"7/3", "1/3", "-5/3", "0", "0"}));
    REQUIRE(r.has_value());
    CHECK(verify_solution(r->sol, r->params).ok);
}
