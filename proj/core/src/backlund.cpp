#include "a4/backlund.hpp"

#include <sstream>

namespace a4 {

Gen invert(Gen g) {
    if (g == Gen::Pi) return Gen::PiInv;
    if (g == Gen::PiInv) return Gen::Pi;
    return g;
}

Word invert(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(invert(*it));
    return r;
}

std::string format_word(const Word& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << " ";
        switch (w[i]) {
            case Gen::S0: out << "s0"; break;
            case Gen::S1: out << "s1"; break;
            case Gen::S2: out << "s2"; break;
            case Gen::S3: out << "s3"; break;
            case Gen::S4: out << "s4"; break;
            case Gen::Pi: out << "pi"; break;
            case Gen::PiInv: out << "pi^-1"; break;
        }
    }
    return out.str();
}

std::optional<Word> parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "pi") w.push_back(Gen::Pi);
        else if (tok == "pi^-1") w.push_back(Gen::PiInv);
        else if (tok.size() == 2 && tok[0] == 's' && tok[1] >= '0' && tok[1] <= '4')
            w.push_back(static_cast<Gen>(tok[1] - '0'));
        else return std::nullopt;
    }
    return w;
}

namespace {
int reflection_index(Gen g) { return static_cast<int>(g); }  // S0..S4 only
}

ParamVec apply_gen_params(Gen g, const ParamVec& a) {
    std::array<Rational, 5> v;
    if (g == Gen::Pi) {
        for (int j = 0; j < 5; ++j) v[ParamVec::mod5(j)] = a[j - 1];
    } else if (g == Gen::PiInv) {
        for (int j = 0; j < 5; ++j) v[ParamVec::mod5(j)] = a[j + 1];
    } else {
        int i = reflection_index(g);
        for (int j = 0; j < 5; ++j) v[ParamVec::mod5(j)] = a[j];
        v[ParamVec::mod5(i)] = -a[i];
        v[ParamVec::mod5(i + 1)] = a[i + 1] + a[i];
        v[ParamVec::mod5(i - 1)] = a[i - 1] + a[i];
    }
    return ParamVec(std::move(v));
}

ParamVec apply_word_params(const Word& w, const ParamVec& a) {
    ParamVec r = a;
    for (Gen g : w) r = apply_gen_params(g, r);
    return r;
}

JointState apply_gen(Gen g, const ParamVec& a, const SolutionTuple& f) {
    if (g == Gen::Pi || g == Gen::PiInv) {
        int shift = (g == Gen::Pi) ? -1 : 1;
        std::array<RationalFunction, 5> nf;
        for (int j = 0; j < 5; ++j) nf[ParamVec::mod5(j)] = f[j + shift];
        return {apply_gen_params(g, a), SolutionTuple(std::move(nf)), false};
    }
    int i = reflection_index(g);
    if (f[i].is_zero()) return {a, f, true};
    RationalFunction step = RationalFunction(a[i]) / f[i];
    std::array<RationalFunction, 5> nf;
    for (int j = 0; j < 5; ++j) nf[ParamVec::mod5(j)] = f[j];
    nf[ParamVec::mod5(i + 1)] = f[i + 1] + step;
    nf[ParamVec::mod5(i - 1)] = f[i - 1] - step;
    return {apply_gen_params(g, a), SolutionTuple(std::move(nf)), false};
}

WordResult apply_word(const Word& w, const ParamVec& a, const std::optional<SolutionTuple>& f) {
    if (!f.has_value()) return {apply_word_params(w, a), std::nullopt, {}};
    WordResult res{a, f, {}};
    for (std::size_t k = 0; k < w.size(); ++k) {
        JointState s = apply_gen(w[k], res.params, *res.sol);
        if (s.degenerate_fired) res.degenerate_positions.push_back(k);
        res.params = std::move(s.params);
        res.sol = std::move(s.sol);
    }
    return res;
}

Word shift_operator(int i) {
    // T_1 = pi s4 s3 s2 s1 as a composition of symbol substitutions; at the
    // value level the rotation letter is pi^-1 (see the relation
    // pi s_i = s_{i+1} pi). T_{i+1} is the cyclic shift of the letters.
    if (i < 0 || i > 4) throw std::invalid_argument("shift operator index out of range");
    // T_{i+1}'s letter list is the cyclic right-shift of T_1's:
    // T_2 = [s1, pi^-1, s4, s3, s2], ..., T_0 = [s4, s3, s2, s1, pi^-1].
    static const Word t1 = {Gen::PiInv, Gen::S4, Gen::S3, Gen::S2, Gen::S1};
    Word w(5);
    for (int p = 0; p < 5; ++p)
        w[static_cast<std::size_t>(p)] = t1[ParamVec::mod5(p - (i - 1))];
    return w;
}

RelationReport check_weyl_relations(const std::vector<ParamVec>& samples) {
    if (samples.empty()) throw std::invalid_argument("relation check needs samples");
    RelationReport rep;
    auto sg = [](int k) { return static_cast<Gen>(ParamVec::mod5(k)); };
    auto check = [&rep](const Word& w, const ParamVec& a, const std::string& name) {
        if (apply_word_params(w, a) != a)
            rep.violations.push_back(name + " fails on " + a.str());
    };
    for (const ParamVec& a : samples) {
        for (int i = 0; i < 5; ++i) {
            check({sg(i), sg(i)}, a, "s" + std::to_string(i) + "^2");
            check({sg(i), sg(i + 2), sg(i), sg(i + 2)}, a,
                  "(s" + std::to_string(i) + " s" + std::to_string((i + 2) % 5) + ")^2");
            Word braid;
            for (int k = 0; k < 3; ++k) {
                braid.push_back(sg(i));
                braid.push_back(sg(i + 1));
            }
            check(braid, a,
                  "(s" + std::to_string(i) + " s" + std::to_string((i + 1) % 5) + ")^3");
            // pi s_i = s_{i+1} pi  <=>  pi s_i pi^-1 s_{i+1} = id (as value maps,
            // applied left-to-right).
            check({sg(i), Gen::Pi, invert(sg(i + 1)), Gen::PiInv}, a,
                  "conjugation pi s" + std::to_string(i));
        }
        check({Gen::Pi, Gen::Pi, Gen::Pi, Gen::Pi, Gen::Pi}, a, "pi^5");
        check({Gen::Pi, Gen::PiInv}, a, "pi pi^-1");
    }
    return rep;
}

InfinityType type_action(Gen g, const InfinityType& type) {
    auto m5 = [](int k) { return static_cast<int>(ParamVec::mod5(k)); };
    if (g == Gen::Pi || g == Gen::PiInv) {
        if (type.kind == InfinityKind::C) return type;
        int shift = (g == Gen::Pi) ? 1 : -1;
        return {type.kind, m5(type.index + shift)};
    }
    int i = reflection_index(g);
    int j = type.index;
    auto rel = [&](int off) { return j == m5(i + off); };
    switch (type.kind) {
        case InfinityKind::A1:
            if (rel(1)) return {InfinityKind::A1, m5(i - 1)};   // leading of f_{i+1} cancels
            if (rel(-1)) return {InfinityKind::A1, m5(i + 1)};  // pole moves across f_i
            if (rel(2)) return {InfinityKind::A2, m5(i + 1)};
            if (rel(-2)) return {InfinityKind::A2, m5(i + 3)};
            return type;  // j == i
        case InfinityKind::A2:
            if (rel(1)) return {InfinityKind::A1, m5(i + 2)};
            if (rel(-2)) return {InfinityKind::A1, m5(i + 3)};
            return type;  // j in {i, i-1, i+2}
        case InfinityKind::B:
            if (rel(1)) return {InfinityKind::B, m5(i + 2)};  // i = index+4: regular f_i shifts the block
            if (rel(2)) return {InfinityKind::B, m5(i + 1)};  // i = index+3
            return type;
        case InfinityKind::C:
            return type;
    }
    return type;
}

}  // namespace a4
