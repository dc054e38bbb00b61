#pragma once

#include <array>
#include <string>
#include <vector>

#include "a4/laurent_analysis.hpp"
#include "a4/system.hpp"

namespace a4 {

// Coefficients of t^3, t, t^-1 of the principal part at infinity. Only odd
// exponents occur for odd solution tuples.
struct HamiltonianExpansion {
    Rational h3, h1, hm1;
};

// Principal part: the cyclic sum f0 f1 f2 + f1 f2 f3 + ... + f4 f0 f1.
RationalFunction hhat(const SolutionTuple& f);

// Principal part plus the linear correction terms.
RationalFunction h_full(const SolutionTuple& f, const ParamVec& a);

HamiltonianExpansion hhat_expansion(const SolutionTuple& f);

// Closed form for the t^-1 coefficient of the principal part at infinity,
// depending only on the pole kind and the parameters.
Rational h_inf_minus1(const InfinityType& type, const ParamVec& a);

// Residue of the principal part at a finite pole of local pattern 1, 2 or 3
// based at index i.
Rational finite_residue_formula(int pattern, int i, const ParamVec& a);

struct BalanceReport {
    bool ok = true;
    Rational infinity_side;  // t^-1 coefficient of the principal part at infinity
    Rational finite_side;    // sum of residue-sums over all denominator factors
};

// Residue theorem for the principal part: the t^-1 coefficient at infinity
// equals the sum of all finite residues.
BalanceReport residue_balance(const SolutionTuple& f);

struct ResidueTable {
    std::array<std::string, 5> alpha;        // the parameter point, "p/q" entries
    std::array<std::string, 3> row_labels;
    std::array<std::array<Rational, 5>, 3> rows;  // rows[pattern-1][i]
    std::string text() const;                // aligned human-readable grid
};

// The two residue grids for (1/3,1/3,1/3,0,0) and (1,0,0,0,0).
std::pair<ResidueTable, ResidueTable> emit_tables();

}  // namespace a4
