#pragma once

#include <optional>
#include <string>

#include "a4/backlund.hpp"
#include "a4/system.hpp"

namespace a4 {

enum class SolvabilityClass { Class1, Class2, Class3, None };
std::string class_name(SolvabilityClass c);

// Pattern from the necessary condition: the fractional parts match one of the
// three admissible families at some base index.
struct TypePattern {
    char family;             // 'A', 'B' or 'C'
    int base = 0;            // base index i
    std::array<int, 3> n{};  // (n1, n3, n4) for B; (n1, n2, n3) for C; unused for A
};

std::optional<TypePattern> necessary_condition(const ParamVec& params);

struct ClassificationResult {
    SolvabilityClass label = SolvabilityClass::None;
    // Witness data when label != None: base index, sign (+1/-1) or j, and the
    // matched pattern vector (as rationals mod 1).
    int witness_index = 0;
    int witness_variant = 0;  // Class2: +1/-1 sign; Class3: j in 1..4
    int witness_vector = 0;   // 0 or 1: which of the two listed vectors matched
    std::optional<ParamVec> canonical;
    std::optional<Word> word_from_canonical;
};

ClassificationResult classify(const ParamVec& params);

// Reduces any parameter tuple passing necessary_condition into the
// fundamental set: returns (word, representative) with
// apply_word_params(word, representative) == params. The representative is
// the orbit representative among the eleven fundamental-set tuples. Throws
// std::invalid_argument when the necessary condition fails and
// std::runtime_error past the word-length cap.
std::pair<Word, ParamVec> reduce_to_canonical(const ParamVec& params);

// true iff every entry lies in [0, 1].
bool in_fundamental_set(const ParamVec& params);

}  // namespace a4
