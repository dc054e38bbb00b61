#include <doctest.h>

#include "a4/system.hpp"

using namespace a4;

namespace {

ParamVec pv(const std::array<std::string, 5>& a) { return ParamVec::from_strings(a); }

SolutionTuple st(const std::array<std::string, 5>& f) {
    std::array<RationalFunction, 5> fs;
    for (int i = 0; i < 5; ++i) fs[static_cast<std::size_t>(i)] = parse_rational_function(f[static_cast<std::size_t>(i)]);
    return SolutionTuple(fs);
}

}  // namespace

TEST_CASE("normalizations are enforced") {
    CHECK_THROWS_AS(pv({"1", "1", "0", "0", "0"}), std::invalid_argument);
    CHECK_NOTHROW(pv({"1/3", "1/3", "1/3", "0", "0"}));
    CHECK_THROWS_AS(st({"t", "t", "0", "0", "0"}), std::invalid_argument);
    CHECK_NOTHROW(st({"t", "0", "0", "0", "0"}));
}

TEST_CASE("cyclic indexing") {
    ParamVec a = pv({"1/3", "1/3", "1/3", "0", "0"});
    CHECK(a[5] == a[0]);
    CHECK(a[-1] == a[4]);
    CHECK(a[7] == a[2]);
    CHECK_FALSE(a.all_integer());
    CHECK(pv({"-1", "1", "0", "0", "1"}).all_integer());
}

TEST_CASE("known solutions verify") {
    // a = (1,0,0,0,0), f = (t,0,0,0,0).
    CHECK(verify_solution(st({"t", "0", "0", "0", "0"}), pv({"1", "0", "0", "0", "0"})).ok);
    // a = (1/3,1/3,1/3,0,0), f = (t/3,t/3,t/3,0,0).
    CHECK(verify_solution(st({"t/3", "t/3", "t/3", "0", "0"}),
                          pv({"1/3", "1/3", "1/3", "0", "0"}))
              .ok);
    // a = (1/5,...,1/5), f = (t/5,...,t/5).
    CHECK(verify_solution(st({"t/5", "t/5", "t/5", "t/5", "t/5"}),
                          pv({"1/5", "1/5", "1/5", "1/5", "1/5"}))
              .ok);
    // a = (-1,1,0,0,1), f = (t, 1/t, 0, 0, -1/t).
    CHECK(verify_solution(st({"t", "1/t", "0", "0", "-1/t"}), pv({"-1", "1", "0", "0", "1"})).ok);
}

TEST_CASE("non-solutions produce per-equation failures") {
    VerifyReport r = verify_solution(st({"t", "0", "0", "0", "0"}), pv({"0", "1", "0", "0", "0"}));
    CHECK_FALSE(r.ok);
    CHECK(r.failures.size() == 2);  // equations 0 and 1 both break
    RationalFunction res = residual(0, st({"t", "0", "0", "0", "0"}), pv({"0", "1", "0", "0", "0"}));
    CHECK(res == parse_rational_function("1"));
}

TEST_CASE("the symmetry t -> -t preserves solutions") {
    SolutionTuple f = st({"t", "1/t", "0", "0", "-1/t"});
    ParamVec a = pv({"-1", "1", "0", "0", "1"});
    SolutionTuple g = negate_t(f);
    CHECK(verify_solution(g, a).ok);
    CHECK(g == f);  // this tuple is odd
    CHECK(is_odd(f));
    CHECK_FALSE(is_odd(st({"t-1", "1", "0", "0", "0"})));
}

TEST_CASE("three-component embedding") {
    SolutionTuple f = st({"t/3", "t/3", "t/3", "0", "0"});
    ParamVec a = pv({"1/3", "1/3", "1/3", "0", "0"});
    CHECK(a2_embedding_check(f, a));
    CHECK_THROWS_AS(a2_embedding_check(st({"t/5", "t/5", "t/5", "t/5", "t/5"}),
                                       pv({"1/5", "1/5", "1/5", "1/5", "1/5"})),
                    std::invalid_argument);
}
