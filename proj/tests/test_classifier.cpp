#include <doctest.h>

#include <random>

#include "a4/classifier.hpp"

using namespace a4;

namespace {

ParamVec pv(const std::array<std::string, 5>& a) { return ParamVec::from_strings(a); }

}  // namespace

TEST_CASE("necessary condition families") {
    auto p = necessary_condition(pv({"1", "0", "0", "0", "0"}));
    REQUIRE(p.has_value());
    CHECK(p->family == 'A');
    p = necessary_condition(pv({"1/3", "1/3", "1/3", "0", "0"}));
    REQUIRE(p.has_value());
    CHECK(p->family == 'B');
    p = necessary_condition(pv({"1/5", "1/5", "1/5", "1/5", "1/5"}));
    REQUIRE(p.has_value());
    CHECK(p->family == 'C');
    CHECK_FALSE(necessary_condition(pv({"1/2", "1/2", "0", "0", "0"})).has_value());
    CHECK_FALSE(necessary_condition(pv({"1/7", "2/7", "0", "0", "4/7"})).has_value());
}

TEST_CASE("classification of the canonical points") {
    ClassificationResult r = classify(pv({"1", "0", "0", "0", "0"}));
    CHECK(r.label == SolvabilityClass::Class1);
    REQUIRE(r.canonical.has_value());
    CHECK(*r.canonical == pv({"1", "0", "0", "0", "0"}));
    REQUIRE(r.word_from_canonical.has_value());
    CHECK(r.word_from_canonical->empty());

    r = classify(pv({"1/3", "1/3", "1/3", "0", "0"}));
    CHECK(r.label == SolvabilityClass::Class2);
    CHECK(r.witness_index == 0);
    CHECK(r.witness_variant == 1);
    CHECK(r.witness_vector == 0);
    CHECK(*r.canonical == pv({"1/3", "1/3", "1/3", "0", "0"}));

    r = classify(pv({"1/5", "1/5", "1/5", "1/5", "1/5"}));
    CHECK(r.label == SolvabilityClass::Class3);
    CHECK(r.witness_variant == 1);
    CHECK(r.witness_vector == 0);
}

TEST_CASE("unsolvable points get no witness data") {
    ClassificationResult r = classify(pv({"1/2", "1/2", "0", "0", "0"}));
    CHECK(r.label == SolvabilityClass::None);
    CHECK_FALSE(r.canonical.has_value());
    CHECK_FALSE(r.word_from_canonical.has_value());
}

TEST_CASE("the documented unsolvable representatives") {
    for (const auto& a : {pv({"2/3", "0", "0", "1/3", "0"}), pv({"1/3", "0", "0", "2/3", "0"}),
                          pv({"0", "1/3", "0", "1/3", "1/3"}), pv({"3/5", "0", "1/5", "1/5", "0"}),
                          pv({"1/5", "0", "2/5", "2/5", "0"}), pv({"1/5", "2/5", "0", "0", "2/5"}),
                          pv({"3/5", "1/5", "0", "0", "1/5"})}) {
        CHECK(classify(a).label == SolvabilityClass::None);
        // All of these satisfy the weaker necessary condition, so reduction
        // still works, just not to a solvable canonical point.
        CHECK(necessary_condition(a).has_value());
    }
}

TEST_CASE("reduction words verify on every classified input") {
    std::vector<ParamVec> inputs = {
        pv({"1", "0", "0", "0", "0"}),       pv({"-1", "1", "0", "0", "1"}),
        pv({"4", "-2", "0", "0", "-1"}),     pv({"1/3", "1/3", "0", "0", "1/3"}),
        pv({"4/3", "1/3", "-2/3", "0", "0"}), pv({"1/5", "1/5", "6/5", "1/5", "-4/5"}),
        pv({"2/5", "4/5", "2/5", "-4/5", "1/5"}),
    };
    for (const ParamVec& a : inputs) {
        auto [word, canonical] = reduce_to_canonical(a);
        CHECK(apply_word_params(word, canonical) == a);
    }
    CHECK_THROWS_AS(reduce_to_canonical(pv({"1/2", "1/2", "0", "0", "0"})),
                    std::invalid_argument);
}

TEST_CASE("the rotation example reduces through the canonical point") {
    auto [word, canonical] = reduce_to_canonical(pv({"1/3", "1/3", "0", "0", "1/3"}));
    CHECK(canonical == pv({"1/3", "1/3", "1/3", "0", "0"}));
    CHECK_FALSE(word.empty());
    CHECK(apply_word_params(word, canonical) == pv({"1/3", "1/3", "0", "0", "1/3"}));
}

TEST_CASE("integer tuples reduce by shift words alone") {
    auto [word, canonical] = reduce_to_canonical(pv({"3", "-2", "0", "0", "0"}));
    CHECK(canonical == pv({"1", "0", "0", "0", "0"}));
    CHECK(apply_word_params(word, canonical) == pv({"3", "-2", "0", "0", "0"}));
}

TEST_CASE("fundamental set membership") {
    CHECK(in_fundamental_set(pv({"1/5", "1/5", "1/5", "1/5", "1/5"})));
    CHECK(in_fundamental_set(pv({"2/3", "0", "0", "1/3", "0"})));
    CHECK(in_fundamental_set(pv({"1", "0", "0", "0", "0"})));
    CHECK_FALSE(in_fundamental_set(pv({"-1", "1", "0", "0", "1"})));
}

TEST_CASE("labels are invariant under the group action") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> pick(0, 6), len(1, 8);
    std::vector<ParamVec> points = {
        pv({"1", "0", "0", "0", "0"}),       pv({"1/3", "1/3", "1/3", "0", "0"}),
        pv({"1/5", "1/5", "1/5", "1/5", "1/5"}), pv({"1/2", "1/2", "0", "0", "0"}),
        pv({"2/3", "0", "0", "1/3", "0"}),
    };
    for (const ParamVec& a : points) {
        SolvabilityClass label = classify(a).label;
        for (int k = 0; k < 10; ++k) {
            Word w;
            int n = len(rng);
            for (int j = 0; j < n; ++j) w.push_back(static_cast<Gen>(pick(rng)));
            CHECK(classify(apply_word_params(w, a)).label == label);
        }
    }
}

TEST_CASE("labels are invariant under rotation") {
    for (const auto& a : {pv({"1/3", "1/3", "1/3", "0", "0"}), pv({"1/2", "1/2", "0", "0", "0"}),
                          pv({"3/5", "1/5", "0", "0", "1/5"})}) {
        SolvabilityClass label = classify(a).label;
        ParamVec cur = a;
        for (int k = 0; k < 5; ++k) {
            cur = apply_gen_params(Gen::Pi, cur);
            CHECK(classify(cur).label == label);
        }
    }
}
