#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "a4/system.hpp"

namespace a4 {

// Behaviour of a solution at t = infinity: which components carry the simple
// pole. A1: only f_i; A2: f_i, f_{i+1}, f_{i+3}; B: f_i, f_{i+1}, f_{i+2};
// C: all five (no base index).
enum class InfinityKind { A1, A2, B, C };

struct InfinityType {
    InfinityKind kind;
    int index = 0;  // base index i; ignored for C

    friend bool operator==(const InfinityType& a, const InfinityType& b) {
        return a.kind == b.kind && (a.kind == InfinityKind::C || a.index == b.index);
    }
    std::string str() const;
};

std::optional<InfinityType> parse_infinity_type(const std::string& text);  // "A1:0", "B:2", "C"

// Leading (t) and subleading (t^{-1}) coefficients of each component at
// infinity.
struct InfinityProfile {
    std::array<Rational, 5> leading;
    std::array<Rational, 5> subleading;
};

// A pole location with per-component residue data. For an irreducible (here:
// squarefree non-linear) denominator factor the entries are residue sums over
// its roots.
struct PoleProfile {
    std::variant<Rational, Polynomial> location;  // finite point or factor
    std::array<Rational, 5> residues;
};

// Determines the pole pattern of sol at infinity. Throws std::domain_error if
// the pattern matches none of the four kinds (the input is not a solution).
InfinityType classify_infinity(const SolutionTuple& sol);

// Closed forms for the leading and t^{-1} coefficients for each kind.
InfinityProfile predicted_profile(const InfinityType& type, const ParamVec& params);

// The unique formal expansion at infinity down to exponent `floor`
// (floor <= -1), built coefficient-by-coefficient from the system itself:
// at each level the equated coefficients form a linear system for the next
// five unknowns, solved exactly.
std::array<LaurentSeries, 5> recurrence_expand(const InfinityType& type, const ParamVec& params,
                                               int floor);

struct PoleAuditReport {
    bool ok = true;
    std::vector<PoleProfile> poles;
    std::vector<std::string> failures;
};

// Audits the finite poles of a verified solution: simple poles only, residues
// in {0, +-1, +-3} matching one of the three local patterns, +-c pairing with
// equal residues, the parity rule tying a pole at 0 to odd residue at
// infinity, and residue-sum integrality plus residue-theorem balance for
// non-rational denominator factors.
PoleAuditReport finite_pole_audit(const SolutionTuple& sol, const ParamVec& params);

}  // namespace a4
