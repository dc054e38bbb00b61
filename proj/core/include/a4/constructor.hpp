#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a4/classifier.hpp"

namespace a4 {

// Raised when a search cap (depth or degree) prevents an answer; distinct
// from nonexistence, which is a classifier verdict.
struct Inconclusive : std::runtime_error {
    explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

// The three exactly-known base solutions the whole construction transports.
std::pair<ParamVec, SolutionTuple> seed_solution(SolvabilityClass label);

struct ConstructResult {
    ParamVec params;
    SolutionTuple sol;
    Word word;  // transporting word actually used, from the seed parameters
    SolvabilityClass label;
};

// Builds the unique rational solution for params, or nullopt when the
// classifier says none exists. Transports the class seed along the
// classifier's word under the joint action; if a degenerate firing derails
// the parameters, falls back to breadth-first search over the joint orbit
// (neighbor order s0..s4, pi, pi^-1; depth-capped). The result is verified
// before it is returned.
std::optional<ConstructResult> construct(const ParamVec& params);

struct AuditEntry {
    std::string name;
    bool ok;
    std::string detail;
};

struct AuditReport {
    bool ok = true;
    std::vector<AuditEntry> entries;
};

// Runs construct and the full downstream audit: the system equations,
// oddness, pole kind at infinity against the predicted profile and the
// recurrence-built expansion, the finite-pole audit, the Hamiltonian residue
// balance, and nonnegativity of the t^-1 Hamiltonian coefficient when the
// parameters lie in the fundamental set.
AuditReport transport_audit(const ParamVec& params);

}  // namespace a4
