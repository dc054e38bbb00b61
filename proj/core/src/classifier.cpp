#include "a4/classifier.hpp"

#include <algorithm>
#include <map>

namespace a4 {

std::string class_name(SolvabilityClass c) {
    switch (c) {
        case SolvabilityClass::Class1: return "Class1";
        case SolvabilityClass::Class2: return "Class2";
        case SolvabilityClass::Class3: return "Class3";
        case SolvabilityClass::None: return "None";
    }
    return "?";
}

namespace {

std::array<Rational, 5> frac5(const ParamVec& a) {
    std::array<Rational, 5> f;
    for (int i = 0; i < 5; ++i) f[static_cast<std::size_t>(i)] = frac_part(a[i]);
    return f;
}

bool matches_at(const ParamVec& a, int base, const std::array<Rational, 5>& pattern) {
    for (int k = 0; k < 5; ++k)
        if (frac_part(a[base + k]) != frac_part(pattern[static_cast<std::size_t>(k)])) return false;
    return true;
}

}  // namespace

std::optional<TypePattern> necessary_condition(const ParamVec& a) {
    if (a.all_integer()) return TypePattern{'A', 0, {}};
    for (int i = 0; i < 5; ++i)
        for (int n1 = 0; n1 <= 2; ++n1)
            for (int n3 = 0; n3 <= 2; ++n3)
                for (int n4 = 0; n4 <= 2; ++n4) {
                    std::array<Rational, 5> p = {rat(n1 - n3, 3), rat(n1, 3), rat(n1 + n4, 3),
                                                 rat(n3, 3), rat(-n4, 3)};
                    if (matches_at(a, i, p)) return TypePattern{'B', i, {n1, n3, n4}};
                }
    for (int i = 0; i < 5; ++i)
        for (int n1 = 0; n1 <= 4; ++n1)
            for (int n2 = 0; n2 <= 4; ++n2)
                for (int n3 = 0; n3 <= 4; ++n3) {
                    std::array<Rational, 5> p = {rat(n1 + 2 * n2 + 3 * n3, 5),
                                                 rat(n1 + 2 * n2 + n3, 5), rat(n1, 5),
                                                 rat(n1 + n2, 5), rat(n1 + n3, 5)};
                    if (matches_at(a, i, p)) return TypePattern{'C', i, {n1, n2, n3}};
                }
    return std::nullopt;
}

bool in_fundamental_set(const ParamVec& a) {
    for (int i = 0; i < 5; ++i)
        if (a[i] < 0 || a[i] > 1) return false;
    return true;
}

namespace {

// ---- fractional-orbit tables -----------------------------------------------
//
// The generic action descends to (Q/Z)^5 with a fixed denominator d; states
// are encoded in base d. A breadth-first search from each fundamental-set
// representative records how to reach every class in its orbit.

struct OrbitTables {
    // code -> (representative index, parent code, generator from parent)
    struct Entry {
        int rep;
        int parent;  // -1 at the root
        Gen gen;
    };
    std::map<int, Entry> entries;
    std::vector<ParamVec> reps;
};

int encode(const std::array<int, 5>& digits, int d) {
    int code = 0;
    for (int k = 4; k >= 0; --k) code = code * d + digits[static_cast<std::size_t>(k)];
    return code;
}

std::array<int, 5> decode(int code, int d) {
    std::array<int, 5> digits;
    for (int k = 0; k < 5; ++k) {
        digits[static_cast<std::size_t>(k)] = code % d;
        code /= d;
    }
    return digits;
}

std::array<int, 5> act_digits(Gen g, const std::array<int, 5>& x, int d) {
    std::array<int, 5> y;
    auto m = [d](int v) { return ((v % d) + d) % d; };
    if (g == Gen::Pi) {
        for (int k = 0; k < 5; ++k) y[ParamVec::mod5(k)] = x[ParamVec::mod5(k - 1)];
    } else if (g == Gen::PiInv) {
        for (int k = 0; k < 5; ++k) y[ParamVec::mod5(k)] = x[ParamVec::mod5(k + 1)];
    } else {
        int i = static_cast<int>(g);
        y = x;
        y[ParamVec::mod5(i)] = m(-x[ParamVec::mod5(i)]);
        y[ParamVec::mod5(i + 1)] = m(x[ParamVec::mod5(i + 1)] + x[ParamVec::mod5(i)]);
        y[ParamVec::mod5(i - 1)] = m(x[ParamVec::mod5(i - 1)] + x[ParamVec::mod5(i)]);
    }
    return y;
}

int frac_code(const ParamVec& a, int d) {
    std::array<int, 5> digits;
    for (int k = 0; k < 5; ++k) {
        Rational f = frac_part(a[k]) * d;
        if (!is_integer(f)) throw std::invalid_argument("fractional parts have the wrong denominator");
        digits[static_cast<std::size_t>(k)] = static_cast<int>(f.get_num().get_si());
    }
    return encode(digits, d);
}

const std::vector<Gen> kAllGens = {Gen::S0, Gen::S1, Gen::S2, Gen::S3,
                                   Gen::S4, Gen::Pi, Gen::PiInv};

OrbitTables build_tables(int d, const std::vector<ParamVec>& reps) {
    OrbitTables t;
    t.reps = reps;
    for (std::size_t r = 0; r < reps.size(); ++r) {
        int root = frac_code(reps[r], d);
        if (t.entries.count(root)) continue;  // representative orbits are disjoint
        t.entries[root] = {static_cast<int>(r), -1, Gen::S0};
        std::vector<int> queue = {root};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int code = queue[q];
            std::array<int, 5> digits = decode(code, d);
            for (Gen g : kAllGens) {
                int next = encode(act_digits(g, digits, d), d);
                if (t.entries.count(next)) continue;
                t.entries[next] = {static_cast<int>(r), code, g};
                queue.push_back(next);
            }
        }
    }
    return t;
}

const OrbitTables& tables_for(int d) {
    static const OrbitTables t3 = build_tables(
        3, {ParamVec({rat(1, 3), rat(1, 3), rat(1, 3), rat(0), rat(0)}),
            ParamVec({rat(2, 3), rat(0), rat(0), rat(1, 3), rat(0)}),
            ParamVec({rat(1, 3), rat(0), rat(0), rat(2, 3), rat(0)}),
            ParamVec({rat(0), rat(1, 3), rat(0), rat(1, 3), rat(1, 3)})});
    static const OrbitTables t5 = build_tables(
        5, {ParamVec({rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5)}),
            ParamVec({rat(3, 5), rat(0), rat(1, 5), rat(1, 5), rat(0)}),
            ParamVec({rat(1, 5), rat(0), rat(2, 5), rat(2, 5), rat(0)}),
            ParamVec({rat(1, 5), rat(2, 5), rat(0), rat(0), rat(2, 5)}),
            ParamVec({rat(3, 5), rat(1, 5), rat(0), rat(0), rat(1, 5)})});
    if (d == 3) return t3;
    if (d == 5) return t5;
    throw std::logic_error("orbit tables exist only for denominators 3 and 5");
}

}  // namespace

std::pair<Word, ParamVec> reduce_to_canonical(const ParamVec& params) {
    auto pattern = necessary_condition(params);
    if (!pattern)
        throw std::invalid_argument("parameters fail the necessary condition; nothing to reduce to");
    Word word;
    ParamVec rep({rat(1), rat(0), rat(0), rat(0), rat(0)});
    if (pattern->family != 'A') {
        int d = (pattern->family == 'B') ? 3 : 5;
        const OrbitTables& t = tables_for(d);
        int code = frac_code(params, d);
        auto it = t.entries.find(code);
        if (it == t.entries.end())
            throw std::runtime_error("fractional class outside every representative orbit");
        rep = t.reps[static_cast<std::size_t>(it->second.rep)];
        // Backtrack to the root; letters come out last-first.
        Word back;
        for (int c = code; t.entries.at(c).parent != -1; c = t.entries.at(c).parent)
            back.push_back(t.entries.at(c).gen);
        word.assign(back.rbegin(), back.rend());
    }
    // Integer stage: the remaining offset is a sum-zero integer vector, a
    // Z-combination of the translations T_i. Exponents are determined up to a
    // common shift; centering on the median keeps the word short.
    ParamVec reached = apply_word_params(word, rep);
    std::array<long, 5> c{};
    long acc = 0;
    for (int k = 0; k < 5; ++k) {
        c[static_cast<std::size_t>(k)] = acc;  // c[0] = 0
        if (k < 4) {
            Rational diff = params[k] - reached[k];
            if (!is_integer(diff)) throw std::logic_error("non-integer offset after fractional stage");
            acc += diff.get_num().get_si();
        }
    }
    std::array<long, 5> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    long median = sorted[2];
    for (int i = 0; i < 5; ++i) {
        long e = c[static_cast<std::size_t>(i)] - median;
        Word t = (e >= 0) ? shift_operator(i) : invert(shift_operator(i));
        for (long k = 0; k < std::abs(e); ++k) word.insert(word.end(), t.begin(), t.end());
    }
    if (static_cast<int>(word.size()) > limits::word_cap())
        throw std::runtime_error("reduction word exceeds the length cap");
    if (apply_word_params(word, rep) != params)
        throw std::logic_error("reduction word fails verification");
    return {word, rep};
}

ClassificationResult classify(const ParamVec& params) {
    ClassificationResult res;
    if (params.all_integer()) {
        res.label = SolvabilityClass::Class1;
    } else {
        auto try_family = [&](SolvabilityClass label, int variant_lo, int variant_hi,
                              auto&& make_pattern) {
            for (int i = 0; i < 5 && res.label == SolvabilityClass::None; ++i)
                for (int v = variant_lo; v <= variant_hi && res.label == SolvabilityClass::None; ++v)
                    for (int vec = 0; vec <= 1; ++vec) {
                        std::array<Rational, 5> p = make_pattern(v, vec);
                        if (matches_at(params, i, p)) {
                            res.label = label;
                            res.witness_index = i;
                            res.witness_variant = v;
                            res.witness_vector = vec;
                            break;
                        }
                    }
        };
        // Class2: +-(1,1,1,0,0)/3 and +-(1,-1,-1,1,0)/3; sign order + then -.
        try_family(SolvabilityClass::Class2, 0, 1, [](int v, int vec) {
            int s = (v == 0) ? 1 : -1;
            std::array<int, 5> base = vec == 0 ? std::array<int, 5>{1, 1, 1, 0, 0}
                                               : std::array<int, 5>{1, -1, -1, 1, 0};
            std::array<Rational, 5> p;
            for (int k = 0; k < 5; ++k) p[static_cast<std::size_t>(k)] = rat(s * base[static_cast<std::size_t>(k)], 3);
            return p;
        });
        if (res.label == SolvabilityClass::None)
            try_family(SolvabilityClass::Class3, 1, 4, [](int j, int vec) {
                std::array<int, 5> base = vec == 0 ? std::array<int, 5>{1, 1, 1, 1, 1}
                                                   : std::array<int, 5>{1, 2, 1, 3, 3};
                std::array<Rational, 5> p;
                for (int k = 0; k < 5; ++k) p[static_cast<std::size_t>(k)] = rat(j * base[static_cast<std::size_t>(k)], 5);
                return p;
            });
        if (res.label == SolvabilityClass::Class2) res.witness_variant = res.witness_variant == 0 ? 1 : -1;
    }
    if (res.label != SolvabilityClass::None) {
        auto [word, canonical] = reduce_to_canonical(params);
        res.word_from_canonical = std::move(word);
        res.canonical = std::move(canonical);
    }
    return res;
}

}  // namespace a4
