#include "a4/hamiltonian.hpp"

#include <iomanip>
#include <sstream>

namespace a4 {

RationalFunction hhat(const SolutionTuple& f) {
    RationalFunction h;
    for (int i = 0; i < 5; ++i) h += f[i] * f[i + 1] * f[i + 2];
    return h;
}

RationalFunction h_full(const SolutionTuple& f, const ParamVec& a) {
    RationalFunction h = hhat(f);
    std::array<Rational, 5> c = {
        2 * a[1] - a[2] + a[3] - 2 * a[4],
        2 * a[1] + 4 * a[2] + a[3] + 3 * a[4],
        -(3 * a[1] + a[2] - a[3] + 2 * a[4]),
        2 * a[1] - a[2] + a[3] + 3 * a[4],
        -(3 * a[1] + a[2] + 4 * a[3] + 2 * a[4]),
    };
    for (int i = 0; i < 5; ++i)
        h += RationalFunction(c[static_cast<std::size_t>(i)] / 5) * f[i];
    return h;
}

HamiltonianExpansion hhat_expansion(const SolutionTuple& f) {
    LaurentSeries s = expand_at_infinity(hhat(f), -1);
    HamiltonianExpansion e;
    e.h3 = s.covers(3) ? s.coeff(3) : Rational(0);
    e.h1 = s.covers(1) ? s.coeff(1) : Rational(0);
    e.hm1 = s.coeff(-1);
    return e;
}

Rational h_inf_minus1(const InfinityType& type, const ParamVec& a) {
    int i = type.index;
    switch (type.kind) {
        case InfinityKind::A1:
            return -a[i + 1] * a[i + 2] - a[i + 3] * a[i + 4] - a[i + 4] * a[i + 1];
        case InfinityKind::A2:
            // Derived from the actual t^-1 coefficients of this kind (the
            // subleading terms feed three-factor products); valid whenever
            // the parameters sum to 1.
            return -a[i] * a[i + 2] - a[i + 1] * a[i + 4] - a[i + 2] * a[i + 3] -
                   3 * a[i + 2] * a[i + 4] - a[i + 3] * a[i + 4];
        case InfinityKind::B: {
            Rational u = a[i] - a[i + 1] + a[i + 3];
            Rational v = a[i + 2] - a[i] - a[i + 3] + a[i + 4];
            Rational w = a[i + 2] + a[i + 4] - a[i + 1];
            return rat(1, 3) * (-u * u - v * w - 9 * a[i + 3] * a[i + 4]);
        }
        case InfinityKind::C: {
            InfinityProfile p = predicted_profile(type, a);
            const Rational &A = p.subleading[0], &B = p.subleading[1], &C = p.subleading[2],
                           &D = p.subleading[3], &E = p.subleading[4];
            return rat(1, 5) * (-A * A + A * E - B * B - A * C - C * C + C * D + 2 * D * E);
        }
    }
    throw std::logic_error("unreachable");
}

Rational finite_residue_formula(int pattern, int i, const ParamVec& a) {
    switch (pattern) {
        case 1: return a[i + 2] + a[i + 4];
        case 2: return a[i + 1];
        case 3: return a[i + 1] + a[i + 4];
        default: throw std::invalid_argument("pattern must be 1, 2 or 3");
    }
}

BalanceReport residue_balance(const SolutionTuple& f) {
    RationalFunction h = hhat(f);
    BalanceReport rep;
    rep.infinity_side = -residue_at_infinity(h);
    rep.finite_side = Rational(0);
    for (const auto& [p, mult] : denominator_factors(h))
        rep.finite_side += residue_sum_over_factor_any_order(h, p);
    rep.ok = (rep.infinity_side == rep.finite_side);
    return rep;
}

std::string ResidueTable::text() const {
    std::ostringstream out;
    out << "alpha = (";
    for (int i = 0; i < 5; ++i) out << (i ? ", " : "") << alpha[static_cast<std::size_t>(i)];
    out << ")\n";
    std::size_t label_w = 0;
    for (const auto& l : row_labels) label_w = std::max(label_w, l.size());
    out << std::left << std::setw(static_cast<int>(label_w) + 2) << "residue";
    for (int i = 0; i < 5; ++i) out << std::setw(8) << ("i=" + std::to_string(i));
    out << "\n";
    for (int r = 0; r < 3; ++r) {
        out << std::setw(static_cast<int>(label_w) + 2) << row_labels[static_cast<std::size_t>(r)];
        for (int i = 0; i < 5; ++i)
            out << std::setw(8) << to_string(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]);
        out << "\n";
    }
    return out.str();
}

std::pair<ResidueTable, ResidueTable> emit_tables() {
    auto make = [](const ParamVec& a) {
        ResidueTable t;
        for (int i = 0; i < 5; ++i) t.alpha[static_cast<std::size_t>(i)] = to_string(a[i]);
        t.row_labels = {"a_{i+2}+a_{i+4}", "a_{i+1}", "a_{i+1}+a_{i+4}"};
        for (int pat = 1; pat <= 3; ++pat)
            for (int i = 0; i < 5; ++i)
                t.rows[static_cast<std::size_t>(pat - 1)][static_cast<std::size_t>(i)] =
                    finite_residue_formula(pat, i, a);
        return t;
    };
    ParamVec b({rat(1, 3), rat(1, 3), rat(1, 3), rat(0), rat(0)});
    ParamVec one({rat(1), rat(0), rat(0), rat(0), rat(0)});
    return {make(b), make(one)};
}

}  // namespace a4
