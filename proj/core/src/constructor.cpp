#include "a4/constructor.hpp"

#include "a4/hamiltonian.hpp"
#include "a4/laurent_analysis.hpp"

namespace a4 {

std::pair<ParamVec, SolutionTuple> seed_solution(SolvabilityClass label) {
    auto lin = [](long num, long den) {
        return RationalFunction(Polynomial::monomial(1, rat(num, den)));
    };
    switch (label) {
        case SolvabilityClass::Class1:
            return {ParamVec({rat(1), rat(0), rat(0), rat(0), rat(0)}),
                    SolutionTuple({lin(1, 1), RationalFunction(), RationalFunction(),
                                   RationalFunction(), RationalFunction()})};
        case SolvabilityClass::Class2:
            return {ParamVec({rat(1, 3), rat(1, 3), rat(1, 3), rat(0), rat(0)}),
                    SolutionTuple({lin(1, 3), lin(1, 3), lin(1, 3), RationalFunction(),
                                   RationalFunction()})};
        case SolvabilityClass::Class3:
            return {ParamVec({rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)}),
                    SolutionTuple({lin(1, 5), lin(1, 5), lin(1, 5), lin(1, 5), lin(1, 5)})};
        case SolvabilityClass::None: break;
    }
    throw std::invalid_argument("no seed for this label");
}

namespace {

const std::vector<Gen> kNeighborOrder = {Gen::S0, Gen::S1, Gen::S2, Gen::S3,
                                         Gen::S4, Gen::Pi, Gen::PiInv};

std::optional<std::pair<SolutionTuple, Word>> joint_bfs(const ParamVec& start_params,
                                                        const SolutionTuple& start_sol,
                                                        const ParamVec& target) {
    struct Node {
        ParamVec params;
        SolutionTuple sol;
        Word word;
        int depth;
    };
    std::map<ParamVec, SolutionTuple> seen;  // memo keyed on parameters (uniqueness)
    std::vector<Node> queue;
    queue.push_back({start_params, start_sol, {}, 0});
    seen.emplace(start_params, start_sol);
    if (start_params == target) return std::make_pair(start_sol, Word{});
    int cap = limits::depth_cap();
    for (std::size_t q = 0; q < queue.size(); ++q) {
        Node cur = queue[q];  // copy: queue may reallocate below
        if (cur.depth >= cap) throw Inconclusive("joint-orbit search hit the depth cap");
        for (Gen g : kNeighborOrder) {
            JointState next = apply_gen(g, cur.params, cur.sol);
            if (seen.count(next.params)) continue;
            Word w = cur.word;
            w.push_back(g);
            seen.emplace(next.params, next.sol);
            if (next.params == target) return std::make_pair(next.sol, w);
            queue.push_back({std::move(next.params), std::move(next.sol), std::move(w),
                             cur.depth + 1});
        }
    }
    throw Inconclusive("joint-orbit search exhausted without reaching the target");
}

}  // namespace

std::optional<ConstructResult> construct(const ParamVec& params) {
    ClassificationResult cls = classify(params);
    if (cls.label == SolvabilityClass::None) return std::nullopt;
    auto [seed_params, seed_sol] = seed_solution(cls.label);
    if (!cls.canonical || !(*cls.canonical == seed_params))
        throw std::logic_error("classifier canonical disagrees with the seed catalog");
    WordResult transported = apply_word(*cls.word_from_canonical, seed_params, seed_sol);
    SolutionTuple sol = *transported.sol;
    Word word = *cls.word_from_canonical;
    if (transported.params != params) {
        // A degenerate firing made the joint action deviate from the generic
        // one; search the joint orbit instead.
        auto found = joint_bfs(seed_params, seed_sol, params);
        if (!found) return std::nullopt;
        sol = found->first;
        word = found->second;
    }
    VerifyReport v = verify_solution(sol, params);
    if (!v.ok) throw std::logic_error("transported tuple fails verification: " + v.failures[0]);
    return ConstructResult{params, std::move(sol), std::move(word), cls.label};
}

AuditReport transport_audit(const ParamVec& params) {
    AuditReport rep;
    auto add = [&rep](const std::string& name, bool ok, std::string detail = "") {
        rep.entries.push_back({name, ok, std::move(detail)});
        rep.ok = rep.ok && ok;
    };
    auto built = construct(params);
    if (!built) {
        rep.ok = false;
        rep.entries.push_back({"construct", false, "no solution exists for these parameters"});
        return rep;
    }
    const SolutionTuple& sol = built->sol;
    VerifyReport v = verify_solution(sol, params);
    add("verify_solution", v.ok, v.ok ? "" : v.failures[0]);
    add("is_odd", is_odd(sol));

    InfinityType type = classify_infinity(sol);
    InfinityProfile prof = predicted_profile(type, params);
    bool prof_ok = true;
    for (int j = 0; j < 5 && prof_ok; ++j) {
        LaurentSeries s = expand_at_infinity(sol[j], -1);
        prof_ok = (s.covers(1) ? s.coeff(1) : Rational(0)) == prof.leading[static_cast<std::size_t>(j)] &&
                  s.coeff(-1) == prof.subleading[static_cast<std::size_t>(j)];
    }
    add("profile[" + type.str() + "]", prof_ok);

    auto series = recurrence_expand(type, params, -12);
    bool rec_ok = true;
    for (int j = 0; j < 5 && rec_ok; ++j) {
        LaurentSeries exact = expand_at_infinity(sol[j], -12);
        for (int k = 1; k >= -12 && rec_ok; --k)
            rec_ok = (exact.covers(k) ? exact.coeff(k) : Rational(0)) ==
                     series[static_cast<std::size_t>(j)].coeff(k);
    }
    add("recurrence_expansion", rec_ok);

    PoleAuditReport pa = finite_pole_audit(sol, params);
    add("finite_pole_audit", pa.ok, pa.ok ? "" : pa.failures[0]);

    BalanceReport bal = residue_balance(sol);
    add("residue_balance", bal.ok,
        bal.ok ? "" : to_string(bal.infinity_side) + " != " + to_string(bal.finite_side));

    if (in_fundamental_set(params)) {
        Rational h = h_inf_minus1(type, params);
        add("h_inf_minus1_nonnegative", h >= 0, to_string(h));
    }
    return rep;
}

}  // namespace a4
