// a4rat: exact rational-solution toolkit for the five-component Painleve
// system of affine type. Every computation is exact; decimals are rejected.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

#include "a4/backlund.hpp"
#include "a4/classifier.hpp"
#include "a4/constructor.hpp"
#include "a4/hamiltonian.hpp"
#include "a4/laurent_analysis.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitContract = 2;
constexpr int kExitInconclusive = 3;

struct Output {
    std::string status = "ok";
    json payload = json::object();
    std::vector<std::string> diagnostics;
    std::string text;  // human-readable rendering
};

bool g_text_format = false;

int emit(const Output& out, int exit_code) {
    if (g_text_format) {
        if (!out.text.empty()) std::cout << out.text;
        for (const auto& d : out.diagnostics) std::cerr << d << "\n";
        if (out.status != "ok" && out.text.empty()) std::cout << out.status << "\n";
    } else {
        json doc = {{"status", out.status}, {"payload", out.payload},
                    {"diagnostics", out.diagnostics}};
        std::cout << doc.dump(2) << "\n";
    }
    return exit_code;
}

int contract_error(const std::string& msg) {
    return emit({.status = "error", .payload = json::object(), .diagnostics = {msg}, .text = msg + "\n"},
                kExitContract);
}

a4::ParamVec parse_alpha(const std::string& text) {
    std::array<std::string, 5> parts;
    std::size_t start = 0;
    for (int i = 0; i < 5; ++i) {
        std::size_t comma = text.find(',', start);
        if ((i < 4) == (comma == std::string::npos))
            throw std::invalid_argument("--alpha needs five comma-separated rationals");
        parts[static_cast<std::size_t>(i)] =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma + 1;
    }
    for (auto& p : parts) {
        while (!p.empty() && p.front() == ' ') p.erase(p.begin());
        while (!p.empty() && p.back() == ' ') p.pop_back();
    }
    return a4::ParamVec::from_strings(parts);
}

json word_json(const a4::Word& w) { return a4::format_word(w); }

json classification_json(const a4::ClassificationResult& c) {
    json j;
    j["label"] = a4::class_name(c.label);
    if (c.label != a4::SolvabilityClass::None && c.label != a4::SolvabilityClass::Class1) {
        j["witness"] = {{"index", c.witness_index},
                        {"variant", c.witness_variant},
                        {"vector", c.witness_vector}};
    }
    if (c.canonical) j["canonical"] = c.canonical->str();
    if (c.word_from_canonical) j["word"] = word_json(*c.word_from_canonical);
    return j;
}

std::vector<std::string> tuple_strings(const a4::SolutionTuple& f) {
    std::vector<std::string> out;
    for (int i = 0; i < 5; ++i) out.push_back(f[i].str());
    return out;
}

std::vector<a4::ParamVec> random_params(int n, unsigned seed = 20240817u) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> den_d(1, 30);
    std::vector<a4::ParamVec> out;
    while (static_cast<int>(out.size()) < n) {
        int den = den_d(rng);
        std::uniform_int_distribution<long> num_d(-3L * den, 3L * den);
        std::array<a4::Rational, 5> v;
        a4::Rational sum(0);
        for (int i = 0; i < 4; ++i) {
            v[static_cast<std::size_t>(i)] = a4::rat(num_d(rng), den);
            sum += v[static_cast<std::size_t>(i)];
        }
        v[4] = a4::Rational(1) - sum;
        out.emplace_back(std::move(v));
    }
    return out;
}

int cmd_classify(const std::string& alpha) {
    a4::ParamVec a = parse_alpha(alpha);
    a4::ClassificationResult c = a4::classify(a);
    Output out;
    out.payload = classification_json(c);
    out.text = "label: " + a4::class_name(c.label) + "\n";
    if (c.canonical) out.text += "canonical: " + c.canonical->str() + "\n";
    if (c.word_from_canonical)
        out.text += "word: " + a4::format_word(*c.word_from_canonical) + "\n";
    if (c.label == a4::SolvabilityClass::None) {
        out.status = "no_solution";
        return emit(out, kExitNoSolution);
    }
    return emit(out, kExitOk);
}

int cmd_construct(const std::string& alpha) {
    a4::ParamVec a = parse_alpha(alpha);
    auto r = a4::construct(a);
    Output out;
    if (!r) {
        out.status = "no_solution";
        out.text = "no rational solution exists for " + a.str() + "\n";
        return emit(out, kExitNoSolution);
    }
    out.payload = {{"label", a4::class_name(r->label)},
                   {"word", word_json(r->word)},
                   {"f", tuple_strings(r->sol)}};
    for (int i = 0; i < 5; ++i)
        out.text += "f" + std::to_string(i) + " = " + r->sol[i].str() + "\n";
    out.text += "word: " + a4::format_word(r->word) + "\n";
    return emit(out, kExitOk);
}

int cmd_verify(const std::string& alpha, const std::array<std::string, 5>& fs) {
    a4::ParamVec a = parse_alpha(alpha);
    std::array<a4::RationalFunction, 5> f;
    for (int i = 0; i < 5; ++i) f[static_cast<std::size_t>(i)] = a4::parse_rational_function(fs[static_cast<std::size_t>(i)]);
    a4::SolutionTuple sol(std::move(f));  // throws (contract) when the sum is not t
    a4::VerifyReport rep = a4::verify_solution(sol, a);
    Output out;
    json residuals = json::array();
    for (int i = 0; i < 5; ++i) residuals.push_back(a4::residual(i, sol, a).str());
    out.payload = {{"ok", rep.ok}, {"residuals", residuals}, {"failures", rep.failures}};
    out.text = rep.ok ? "all five equations hold\n" : "";
    for (const auto& fl : rep.failures) out.text += fl + "\n";
    if (!rep.ok) {
        out.status = "error";
        return emit(out, kExitNoSolution);
    }
    return emit(out, kExitOk);
}

int cmd_tables() {
    auto [t1, t2] = a4::emit_tables();
    Output out;
    auto grid = [](const a4::ResidueTable& t) {
        json rows = json::array();
        for (int r = 0; r < 3; ++r) {
            json row = {{"label", t.row_labels[static_cast<std::size_t>(r)]}, {"values", json::array()}};
            for (int i = 0; i < 5; ++i)
                row["values"].push_back(a4::to_string(t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]));
            rows.push_back(row);
        }
        return json{{"alpha", t.alpha}, {"rows", rows}};
    };
    out.payload = {{"table1", grid(t1)}, {"table2", grid(t2)}};
    out.text = t1.text() + "\n" + t2.text();
    return emit(out, kExitOk);
}

int cmd_relations(int samples) {
    a4::RelationReport rep = a4::check_weyl_relations(random_params(samples));
    Output out;
    out.payload = {{"samples", samples}, {"violations", rep.violations}};
    out.text = rep.ok() ? "all relations hold on " + std::to_string(samples) + " samples\n" : "";
    for (const auto& v : rep.violations) out.text += v + "\n";
    if (!rep.ok()) {
        out.status = "error";
        return emit(out, kExitNoSolution);
    }
    return emit(out, kExitOk);
}

int cmd_expand(const std::string& alpha, const std::string& type_text, int floor) {
    a4::ParamVec a = parse_alpha(alpha);
    auto type = a4::parse_infinity_type(type_text);
    if (!type) return contract_error("unrecognized type '" + type_text + "' (expect A1:i, A2:i, B:i or C)");
    auto series = a4::recurrence_expand(*type, a, floor);
    Output out;
    json arr = json::array();
    for (int i = 0; i < 5; ++i) arr.push_back(series[static_cast<std::size_t>(i)].str());
    out.payload = {{"type", type->str()}, {"floor", floor}, {"series", arr}};
    for (int i = 0; i < 5; ++i)
        out.text += "f" + std::to_string(i) + " = " + series[static_cast<std::size_t>(i)].str() + "\n";
    return emit(out, kExitOk);
}

int cmd_hamiltonian(const std::string& alpha) {
    a4::ParamVec a = parse_alpha(alpha);
    auto r = a4::construct(a);
    Output out;
    if (!r) {
        out.status = "no_solution";
        out.text = "no rational solution exists for " + a.str() + "\n";
        return emit(out, kExitNoSolution);
    }
    a4::RationalFunction h = a4::hhat(r->sol);
    a4::HamiltonianExpansion e = a4::hhat_expansion(r->sol);
    a4::InfinityType type = a4::classify_infinity(r->sol);
    a4::Rational closed = a4::h_inf_minus1(type, a);
    a4::BalanceReport bal = a4::residue_balance(r->sol);
    out.payload = {{"hhat", h.str()},
                   {"h3", a4::to_string(e.h3)},
                   {"h1", a4::to_string(e.h1)},
                   {"hm1", a4::to_string(e.hm1)},
                   {"closed_form_hm1", a4::to_string(closed)},
                   {"type", type.str()},
                   {"balance_ok", bal.ok},
                   {"finite_side", a4::to_string(bal.finite_side)}};
    out.text = "hhat = " + h.str() + "\n" + "h_{inf,-1} = " + a4::to_string(e.hm1) +
               " (closed form " + a4::to_string(closed) + ")\n" + "balance: " +
               (bal.ok ? "ok" : "VIOLATED") + "\n";
    if (e.hm1 != closed || !bal.ok) {
        out.status = "error";
        return emit(out, kExitNoSolution);
    }
    return emit(out, kExitOk);
}

int cmd_apply(const std::string& word_text, const std::string& alpha,
              const std::vector<std::string>& fs) {
    auto word = a4::parse_word(word_text);
    if (!word) return contract_error("unparseable word '" + word_text + "'");
    a4::ParamVec a = parse_alpha(alpha);
    std::optional<a4::SolutionTuple> sol;
    if (!fs.empty()) {
        if (fs.size() != 5) return contract_error("--f needs exactly five functions");
        std::array<a4::RationalFunction, 5> f;
        for (int i = 0; i < 5; ++i) f[static_cast<std::size_t>(i)] = a4::parse_rational_function(fs[static_cast<std::size_t>(i)]);
        sol = a4::SolutionTuple(std::move(f));
    }
    a4::WordResult res = a4::apply_word(*word, a, sol);
    Output out;
    out.payload = {{"params", res.params.str()},
                   {"degenerate_positions", res.degenerate_positions}};
    out.text = "params: " + res.params.str() + "\n";
    if (res.sol) {
        out.payload["f"] = tuple_strings(*res.sol);
        for (int i = 0; i < 5; ++i)
            out.text += "f" + std::to_string(i) + " = " + (*res.sol)[i].str() + "\n";
    }
    return emit(out, kExitOk);
}

void read_caps_from_env() {
    if (const char* v = std::getenv("A4_DEGREE_CAP")) a4::limits::set_degree_cap(std::atoi(v));
    if (const char* v = std::getenv("A4_DEPTH_CAP")) a4::limits::set_depth_cap(std::atoi(v));
    if (const char* v = std::getenv("A4_WORD_CAP")) a4::limits::set_word_cap(std::atoi(v));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational solutions of a five-component Painleve system"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "structured";
    app.add_option("--format", format, "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string alpha, type_text = "C", word_text;
    std::array<std::string, 5> fs;
    std::vector<std::string> apply_fs;
    int floor = -8, samples = 100;

    auto* classify_cmd = app.add_subcommand("classify", "decide solvability of --alpha");
    classify_cmd->add_option("--alpha", alpha)->required();

    auto* construct_cmd = app.add_subcommand("construct", "build the rational solution");
    construct_cmd->add_option("--alpha", alpha)->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a candidate tuple");
    verify_cmd->add_option("--alpha", alpha)->required();
    verify_cmd->add_option("--f0", fs[0])->required();
    verify_cmd->add_option("--f1", fs[1])->required();
    verify_cmd->add_option("--f2", fs[2])->required();
    verify_cmd->add_option("--f3", fs[3])->required();
    verify_cmd->add_option("--f4", fs[4])->required();

    app.add_subcommand("tables", "residue grids at the two table points");

    auto* relations_cmd = app.add_subcommand("relations", "verify the group relations");
    relations_cmd->add_option("--samples", samples);

    auto* expand_cmd = app.add_subcommand("expand", "formal expansion at infinity");
    expand_cmd->add_option("--alpha", alpha)->required();
    expand_cmd->add_option("--type", type_text, "A1:i, A2:i, B:i or C");
    expand_cmd->add_option("--floor", floor);

    auto* ham_cmd = app.add_subcommand("hamiltonian", "principal-part residue audit");
    ham_cmd->add_option("--alpha", alpha)->required();

    auto* apply_cmd = app.add_subcommand("apply", "apply a generator word");
    apply_cmd->add_option("--word", word_text)->required();
    apply_cmd->add_option("--alpha", alpha)->required();
    apply_cmd->add_option("--f", apply_fs, "five components (joint action)")->expected(0, 5);

    CLI11_PARSE(app, argc, argv);
    g_text_format = (format == "text");
    read_caps_from_env();

    try {
        if (app.got_subcommand("classify")) return cmd_classify(alpha);
        if (app.got_subcommand("construct")) return cmd_construct(alpha);
        if (app.got_subcommand("verify")) return cmd_verify(alpha, fs);
        if (app.got_subcommand("tables")) return cmd_tables();
        if (app.got_subcommand("relations")) return cmd_relations(samples);
        if (app.got_subcommand("expand")) return cmd_expand(alpha, type_text, floor);
        if (app.got_subcommand("hamiltonian")) return cmd_hamiltonian(alpha);
        if (app.got_subcommand("apply")) return cmd_apply(word_text, alpha, apply_fs);
    } catch (const a4::Inconclusive& e) {
        Output out;
        out.status = "inconclusive";
        out.diagnostics = {e.what()};
        out.text = std::string("inconclusive: ") + e.what() + "\n";
        return emit(out, kExitInconclusive);
    } catch (const a4::DegreeCapError& e) {
        Output out;
        out.status = "inconclusive";
        out.diagnostics = {e.what()};
        out.text = std::string("inconclusive: ") + e.what() + "\n";
        return emit(out, kExitInconclusive);
    } catch (const std::exception& e) {
        return contract_error(e.what());
    }
    return contract_error("no subcommand");
}
