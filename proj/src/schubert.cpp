#include "schubert/schubert.hpp"

#include <stdexcept>

#include "parallel_sum.hpp"
#include "schubert/balanced.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/redword.hpp"

namespace schubert {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::CompatibleSequences: return "compatible-sequences";
        case Strategy::SlideWords: return "slide-words";
        case Strategy::ReducedDiagrams: return "reduced-diagrams";
        case Strategy::SSBT: return "ssbt";
        case Strategy::KeyYamanouchi: return "key-yamanouchi";
        case Strategy::Kohnert: return "kohnert";
        case Strategy::DividedDifference: return "divided-difference";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    for (auto s : all_strategies)
        if (strategy_name(s) == name) return s;
    return std::nullopt;
}

Polynomial schubert_by_divided_differences(const Permutation& w) {
    int n = std::max(w.trimmed().size(), 1);
    Permutation u = w.padded(n).inverse() * Permutation::longest(n);
    Polynomial p = staircase_monomial(n);
    const ReducedWord word = super_yamanouchi_word(u);
    for (int a : word.letters()) p = divided_difference(p, a);
    return p;
}

namespace {

Polynomial weights_polynomial(const std::vector<WeakComposition>& weights) {
    Polynomial p;
    for (const auto& b : weights)
        if (!b.is_virtual()) p.add_term(b, 1);
    return p;
}

Polynomial expansion_polynomial(const Expansion& e, Polynomial (*basis)(const WeakComposition&)) {
    Polynomial p;
    for (const auto& [index, mult] : e) p += basis(index) * Polynomial::constant(mult);
    return p;
}

Polynomial key_by_skt(const WeakComposition& a) { return key_polynomial(a, KeyStrategy::SKT); }

}  // namespace

Polynomial schubert_polynomial(const Permutation& w, Strategy strategy, Execution exec) {
    switch (strategy) {
        case Strategy::CompatibleSequences: {
            auto words = reduced_words(w);
            return detail::parallel_sum(static_cast<long>(words.size()), exec, [&](long k) {
                Polynomial p;
                for (const auto& alpha : compatible_sequences(words[k])) p.add_term(sequence_weight(alpha), 1);
                return p;
            });
        }
        case Strategy::SlideWords: {
            auto words = reduced_words(w);
            return detail::parallel_sum(static_cast<long>(words.size()), exec, [&](long k) {
                return fundamental_slide(weak_descent_composition(words[k]));
            });
        }
        case Strategy::ReducedDiagrams: {
            auto words = reduced_words(w);
            return detail::parallel_sum(static_cast<long>(words.size()), exec, [&](long k) {
                auto d = diagram_of_word(words[k]);
                auto weight = diagram_weight(d);
                Polynomial p;
                if (weight.is_virtual()) return p;
                for (const auto& b : slide_support(weight)) p.add_term(diagram_weight(destandardization_fiber(d, b)), 1);
                return p;
            });
        }
        case Strategy::SSBT: {
            std::vector<WeakComposition> weights;
            for (const auto& t : enumerate_balanced(w, BalancedKind::SSBT)) weights.push_back(t.weight());
            return weights_polynomial(weights);
        }
        case Strategy::KeyYamanouchi:
            return expansion_polynomial(key_expansion(w), key_by_skt);
        case Strategy::Kohnert:
            return kohnert_polynomial(rothe_diagram(w), exec);
        case Strategy::DividedDifference:
            return schubert_by_divided_differences(w);
    }
    throw std::invalid_argument("unknown strategy");
}

Polynomial key_polynomial(const WeakComposition& a, KeyStrategy strategy) {
    if (a.is_virtual()) throw std::invalid_argument("key polynomial of the virtual composition");
    if (strategy == KeyStrategy::Kohnert) return kohnert_polynomial(key_diagram(a));
    return expansion_polynomial(key_slide_expansion(a), fundamental_slide);
}

Expansion slide_expansion(const Permutation& w) {
    Expansion e;
    for (const auto& word : reduced_words(w)) {
        auto des = weak_descent_composition(word);
        if (!des.is_virtual()) ++e[des];
    }
    return e;
}

Expansion key_expansion(const Permutation& w) {
    Expansion e;
    for (const auto& d : enumerate_diagrams(w, DiagramKind::YRD)) ++e[diagram_weight(d)];
    return e;
}

Expansion key_slide_expansion(const WeakComposition& a) {
    Expansion e;
    for (const auto& t : standard_key_tableaux(a)) {
        auto des = skt_descent_composition(t);
        if (!des.is_virtual()) ++e[des];
    }
    return e;
}

}  // namespace schubert
