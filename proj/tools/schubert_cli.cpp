#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/balanced.hpp"
#include "schubert/diagram.hpp"
#include "schubert/guard.hpp"
#include "schubert/insertion.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/redword.hpp"
#include "schubert/schubert.hpp"
#include "schubert/serialize.hpp"
#include "schubert/verify.hpp"

using namespace schubert;
using nlohmann::json;

namespace {

constexpr int exit_parse = 2;
constexpr int exit_guard = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string perm;
    std::string comp;
    std::string basis = "monomial";
    std::string strategy;
    std::string object;
    std::string suite;
    std::string format = "text";
    int n = 4;
    std::size_t sample = 0;
    std::uint64_t seed = 1;
};

struct Target {
    std::optional<Permutation> perm;
    std::optional<WeakComposition> comp;
};

Target parse_target(const Options& o) {
    if (o.perm.empty() == o.comp.empty()) throw UsageError("give exactly one of --perm and --comp");
    Target t;
    try {
        if (!o.perm.empty()) t.perm = Permutation::parse(o.perm);
        else t.comp = WeakComposition::parse(o.comp);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return t;
}

std::string word_text(const ReducedWord& w) { return "(" + w.to_string() + ")"; }

std::string rows_text(const LabeledDiagram& d) {
    std::string out;
    for (const auto& row : d.rows()) {
        if (!out.empty()) out += " / ";
        out += "r" + std::to_string(row.row) + ":";
        for (int label : row.labels) out += " " + std::to_string(label);
    }
    return out.empty() ? "(empty)" : out;
}

std::string cells_text(const Diagram& d) {
    std::string out;
    for (const auto& c : d.cells()) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    return out.empty() ? "(empty)" : out;
}

// One rendered listing: text lines, art blocks and json records side by side.
struct Listing {
    std::vector<std::string> text;
    std::vector<std::string> art;
    json records = json::array();

    template <class T>
    void add(std::string line, std::string picture, const T& item) {
        text.push_back(std::move(line));
        art.push_back(std::move(picture));
        records.push_back(to_json(item));
    }
};

Listing list_object(const std::string& object, const Target& t) {
    Listing out;
    auto need_perm = [&] {
        if (!t.perm) throw UsageError("--object " + object + " needs --perm");
        return *t.perm;
    };
    if (object == "words") {
        for (const auto& w : reduced_words(need_perm())) {
            out.text.push_back(word_text(w));
            out.art.push_back(word_text(w) + "\n");
            out.records.push_back(std::vector<int>(w.letters().begin(), w.letters().end()));
        }
    } else if (object == "qrd" || object == "rd" || object == "yrd") {
        auto kind = object == "qrd" ? DiagramKind::QRD : object == "rd" ? DiagramKind::RD : DiagramKind::YRD;
        for (const auto& d : enumerate_diagrams(need_perm(), kind)) out.add(rows_text(d), render_art(d), d);
    } else if (object == "sbt" || object == "ssbt" || object == "qbt") {
        auto kind = object == "sbt" ? BalancedKind::SBT : object == "ssbt" ? BalancedKind::SSBT : BalancedKind::QBT;
        for (const auto& b : enumerate_balanced(need_perm(), kind)) {
            auto d = b.as_labeled();
            out.add(rows_text(d), render_art(d), b);
        }
    } else if (object == "skt") {
        if (!t.comp) throw UsageError("--object skt needs --comp");
        for (const auto& k : standard_key_tableaux(*t.comp)) out.add(k.to_string(), render_art(k), k);
    } else if (object == "kohnert") {
        Diagram start = t.perm ? rothe_diagram(*t.perm) : key_diagram(*t.comp);
        for (const auto& d : kohnert_closure(start, Execution::parallel)) out.add(cells_text(d), render_art(d), d);
    } else {
        throw UsageError("unknown object: " + object);
    }
    return out;
}

int run_expand(const Options& o) {
    Target t = parse_target(o);
    std::optional<Strategy> strategy;
    if (!o.strategy.empty()) {
        strategy = parse_strategy(o.strategy);
        if (!strategy) throw UsageError("unknown strategy: " + o.strategy);
    }
    std::optional<Polynomial> poly;
    std::optional<Expansion> expansion;
    std::string symbol;
    int length = 0;
    if (t.perm) {
        length = std::max(t.perm->size() - 1, 0);
        if (o.basis == "monomial") poly = schubert_polynomial(*t.perm, strategy.value_or(Strategy::CompatibleSequences), Execution::parallel);
        else if (o.basis == "slide") expansion = slide_expansion(*t.perm), symbol = "F";
        else if (o.basis == "key") expansion = key_expansion(*t.perm), symbol = "k";
        else throw UsageError("unknown basis: " + o.basis);
    } else {
        length = t.comp->length();
        if (t.comp->is_virtual()) throw UsageError("virtual composition has no key polynomial");
        if (o.basis == "monomial") {
            auto how = KeyStrategy::SKT;
            if (strategy == Strategy::Kohnert) how = KeyStrategy::Kohnert;
            else if (strategy && strategy != Strategy::KeyYamanouchi) throw UsageError("key polynomials use key-yamanouchi or kohnert");
            poly = key_polynomial(*t.comp, how);
        } else if (o.basis == "slide") {
            expansion = key_slide_expansion(*t.comp), symbol = "F";
        } else if (o.basis == "key") {
            expansion = Expansion{{*t.comp, 1}}, symbol = "k";
        } else {
            throw UsageError("unknown basis: " + o.basis);
        }
    }
    if (o.format == "json") {
        json out{{"basis", o.basis}};
        if (t.perm) out["permutation"] = std::vector<int>(t.perm->values().begin(), t.perm->values().end());
        else out["composition"] = to_json(*t.comp);
        if (poly) out["polynomial"] = to_json(*poly);
        else out["expansion"] = to_json(*expansion);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (poly ? poly->to_string() : expansion_text(*expansion, symbol, length)) << "\n";
    }
    return 0;
}

int run_enumerate(const Options& o) {
    Target t = parse_target(o);
    Listing l = list_object(o.object, t);
    if (o.format == "json") {
        std::cout << json{{"object", o.object}, {"items", l.records}, {"count", l.records.size()}}.dump() << "\n";
        return 0;
    }
    const auto& lines = o.format == "art" ? l.art : l.text;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (o.format == "art" && k > 0) std::cout << "\n";
        std::cout << lines[k];
        if (o.format != "art") std::cout << "\n";
    }
    std::cout << "count: " << lines.size() << "\n";
    return 0;
}

int run_verify(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be positive");
    check_cells(static_cast<std::size_t>(o.n) * (o.n - 1) / 2, "verify bound");
    std::vector<CheckResult> results;
    if (o.suite == "cross-model") {
        auto perms = o.sample > 0 ? sample_permutations(o.n, o.sample, o.seed) : all_permutations(o.n);
        results = verify_cross_model(perms, Execution::parallel);
    } else if (o.suite == "bijections") {
        results = verify_bijections(o.n, Execution::parallel);
    } else if (o.suite == "involutions") {
        results = verify_involutions(o.n, Execution::parallel);
    } else {
        throw UsageError("unknown suite: " + o.suite);
    }
    bool ok = all_passed(results);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& r : results)
            out.push_back({{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"counterexample", r.counterexample}});
        std::cout << json{{"suite", o.suite}, {"n", o.n}, {"passed", ok}, {"checks", out}}.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases << " cases)";
            if (!r.passed) std::cout << " first counterexample: " << r.counterexample;
            std::cout << "\n";
        }
        std::cout << o.suite << " n=" << o.n << ": " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomials through their combinatorial models"};
    app.require_subcommand(1);
    Options o;

    auto add_target = [&](CLI::App* cmd) {
        cmd->add_option("--perm", o.perm, "Permutation, e.g. 4,2,1,5,3");
        cmd->add_option("--comp", o.comp, "Weak composition, e.g. 0,3,0,2");
    };
    auto add_format = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* expand = app.add_subcommand("expand", "Expand a Schubert or key polynomial");
    add_target(expand);
    expand->add_option("--basis", o.basis, "monomial, slide or key")->check(CLI::IsMember({"monomial", "slide", "key"}));
    expand->add_option("--strategy", o.strategy, "Model used for the monomial expansion");
    add_format(expand, {"text", "json"});

    auto* enumerate = app.add_subcommand("enumerate", "List the objects of a model");
    add_target(enumerate);
    enumerate->add_option("--object", o.object, "words, qrd, rd, yrd, sbt, ssbt, qbt, skt or kohnert")->required();
    add_format(enumerate, {"text", "json", "art"});

    auto* verify = app.add_subcommand("verify", "Run an invariant suite over S_n");
    verify->add_option("--suite", o.suite, "cross-model, bijections or involutions")->required();
    verify->add_option("--n", o.n, "Permutation size");
    verify->add_option("--sample", o.sample, "Sample this many permutations instead of all (cross-model)");
    verify->add_option("--seed", o.seed, "Seed for sampled suites");
    add_format(verify, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    }

    try {
        if (*expand) return run_expand(o);
        if (*enumerate) return run_enumerate(o);
        return run_verify(o);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
