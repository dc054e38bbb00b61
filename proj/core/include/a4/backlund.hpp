#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a4/laurent_analysis.hpp"
#include "a4/system.hpp"

namespace a4 {

enum class Gen { S0, S1, S2, S3, S4, Pi, PiInv };

// A word acts left-to-right: the first letter is applied first.
using Word = std::vector<Gen>;

Gen invert(Gen g);            // s_i are involutions; Pi <-> PiInv
Word invert(const Word& w);   // reversed word of inverted letters

std::string format_word(const Word& w);                 // "pi s4 s3 s2 s1"
std::optional<Word> parse_word(const std::string& text);

// Generic parameter action, ignoring solutions entirely. s_i: a_i -> -a_i,
// a_{i+-1} -> a_{i+-1} + a_i; Pi rotates (a0..a4) -> (a4,a0,a1,a2,a3).
ParamVec apply_gen_params(Gen g, const ParamVec& a);
ParamVec apply_word_params(const Word& w, const ParamVec& a);

struct JointState {
    ParamVec params;
    SolutionTuple sol;
    bool degenerate_fired = false;  // s_i hit a component that vanishes identically
};

// Joint action on (parameters, solution). When g = s_i and f_i is the zero
// function, s_i acts as the full identity (parameters included) and the
// firing is flagged.
JointState apply_gen(Gen g, const ParamVec& a, const SolutionTuple& f);

struct WordResult {
    ParamVec params;
    std::optional<SolutionTuple> sol;
    std::vector<std::size_t> degenerate_positions;  // indices into the word
};
WordResult apply_word(const Word& w, const ParamVec& a,
                      const std::optional<SolutionTuple>& f = std::nullopt);

// The translation T_i: a_{i-1} -> a_{i-1} + 1, a_i -> a_i - 1, others fixed,
// as a five-letter generator word.
Word shift_operator(int i);

struct RelationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies the defining relations of the group as maps on parameters via the
// generic action: s_i^2, commutation for non-adjacent pairs, the braid
// relation for adjacent pairs, pi^5, and pi s_i = s_{i+1} pi.
RelationReport check_weyl_relations(const std::vector<ParamVec>& samples);

// Predicted pole-kind at infinity after applying g, including the base-index
// bookkeeping (leading terms of a_i/f_i can create or cancel poles in the
// neighbours of f_i). Valid when no degenerate identity fires.
InfinityType type_action(Gen g, const InfinityType& type);

}  // namespace a4
