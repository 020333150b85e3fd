#include "schubert/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "schubert/balanced.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/redword.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

void CheckResult::fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<Permutation> sample_permutations(int n, std::size_t count, std::uint64_t seed) {
    std::size_t total = 1;
    for (int k = 2; k <= n; ++k) total *= static_cast<std::size_t>(k);
    if (count >= total) return all_permutations(n);
    std::mt19937_64 rng(seed);
    std::vector<int> values(n);
    std::set<Permutation> chosen;
    while (chosen.size() < count) {
        for (int k = 0; k < n; ++k) values[k] = k + 1;
        std::shuffle(values.begin(), values.end(), rng);
        chosen.insert(Permutation(values));
    }
    return {chosen.begin(), chosen.end()};
}

namespace {

using Checks = std::vector<CheckResult>;
using PerPermutation = std::function<void(const Permutation&, Checks&)>;

// Runs body on every permutation and merges the partial results in input
// order, so the reported counterexample does not depend on scheduling.
Checks run_checks(const std::vector<std::string>& names, const std::vector<Permutation>& perms, Execution exec,
                  const PerPermutation& body) {
    std::vector<Checks> partial(perms.size());
    long count = static_cast<long>(perms.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
    for (long k = 0; k < count; ++k) {
        Checks local;
        for (const auto& name : names) local.push_back(CheckResult{.name = name, .counterexample = {}});
        try {
            body(perms[k], local);
        } catch (const std::exception& e) {
            local.front().fail(perms[k].to_string() + ": " + e.what());
        }
        partial[k] = std::move(local);
    }
    Checks merged;
    for (const auto& name : names) merged.push_back(CheckResult{.name = name, .counterexample = {}});
    for (const auto& local : partial)
        for (std::size_t c = 0; c < merged.size(); ++c) {
            merged[c].cases += local[c].cases;
            if (!local[c].passed) merged[c].fail(local[c].counterexample);
        }
    return merged;
}

std::string describe(const Permutation& w, const ReducedWord& rho) {
    return w.to_string() + " word " + rho.to_string();
}

std::vector<int> as_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

std::vector<CheckResult> verify_cross_model(const std::vector<Permutation>& perms, Execution exec) {
    std::vector<std::string> names;
    for (auto s : all_strategies) names.emplace_back(strategy_name(s));
    return run_checks(names, perms, exec, [](const Permutation& w, Checks& out) {
        const Polynomial oracle = schubert_by_divided_differences(w);
        for (std::size_t s = 0; s < all_strategies.size(); ++s) {
            ++out[s].cases;
            try {
                if (schubert_polynomial(w, all_strategies[s]) != oracle) out[s].fail(w.to_string());
            } catch (const std::exception& e) {
                out[s].fail(w.to_string() + ": " + e.what());
            }
        }
    });
}

std::vector<CheckResult> verify_bijections(int n, Execution exec) {
    enum : std::size_t { reading, moves, sbt, ssbt, partition, knuth, dual, descent };
    const std::vector<std::string> names{
        "qrd-reading-word", "qrd-moves",     "ascend-sbt",       "ascend-ssbt",
        "insertion-partition", "coxeter-knuth", "weak-dual-lemma", "recording-descent",
    };
    return run_checks(names, all_permutations(n), exec, [](const Permutation& w, Checks& out) {
        const auto words = reduced_words(w);
        const std::size_t word_count = words.size();

        // Reading word and weight.
        std::vector<LabeledDiagram> diagrams;
        for (const auto& rho : words) {
            ++out[reading].cases;
            auto d = diagram_of_word(rho);
            if (reading_word(d) != as_vector(rho.letters()) || diagram_weight(d) != weak_descent_composition(rho) ||
                !classify(d).quasi_yamanouchi)
                out[reading].fail(describe(w, rho));
            diagrams.push_back(std::move(d));
        }
        if (std::set<LabeledDiagram>(diagrams.begin(), diagrams.end()).size() != word_count ||
            enumerate_diagrams(w, DiagramKind::QRD).size() != word_count)
            out[reading].fail(w.to_string() + ": QRD count differs from |R(w)|");

        for (std::size_t k = 0; k < word_count; ++k)
            for (int i = 1; i <= words[k].length(); ++i)
                for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                    ++out[moves].cases;
                    if (qrd_move(diagrams[k], kind, i) != diagram_of_word(word_move(words[k], kind, i)))
                        out[moves].fail(describe(w, words[k]) + " position " + std::to_string(i));
                }

        // Ascend onto standard balanced tableaux.
        std::set<BalancedTableau> image;
        for (std::size_t k = 0; k < word_count; ++k) {
            ++out[sbt].cases;
            auto t = ascend(diagrams[k], AscendLevel::QRD_to_SBT);
            auto stats = word_statistics(words[k]);
            if (!classify_balanced(t).standard || sbt_permutation(t) != stats.pairing ||
                sbt_inversions(t) != stats.inversions)
                out[sbt].fail(describe(w, words[k]));
            image.insert(std::move(t));
        }
        auto standard = enumerate_balanced(w, BalancedKind::SBT);
        if (image != std::set<BalancedTableau>(standard.begin(), standard.end()))
            out[sbt].fail(w.to_string() + ": image is not SBT(w)");

        // Ascend onto semi-standard balanced tableaux, weight preserved.
        std::set<BalancedTableau> semi_image;
        for (const auto& d : enumerate_diagrams(w, DiagramKind::RD)) {
            ++out[ssbt].cases;
            auto t = ascend(d, AscendLevel::RD_to_SSBT);
            if (!classify_balanced(t).semi_standard || t.weight() != diagram_weight(d))
                out[ssbt].fail(describe(w, ReducedWord(reading_word(d))));
            semi_image.insert(std::move(t));
        }
        auto semi = enumerate_balanced(w, BalancedKind::SSBT);
        if (semi_image != std::set<BalancedTableau>(semi.begin(), semi.end()))
            out[ssbt].fail(w.to_string() + ": image is not SSBT(w)");

        // Insertion classes.
        std::map<KeyTableau, std::vector<std::size_t>> classes;
        std::vector<KeyTableau> recording;
        for (std::size_t k = 0; k < word_count; ++k) {
            auto [p, q] = weak_insert(words[k]);
            ++out[descent].cases;
            if (skt_descent_composition(q) != weak_descent_composition(words[k])) out[descent].fail(describe(w, words[k]));
            classes[p].push_back(k);
            recording.push_back(std::move(q));
        }
        for (const auto& [p, members] : classes) {
            ++out[partition].cases;
            std::vector<std::size_t> yamanouchi;
            for (auto k : members)
                if (classify(diagrams[k]).yamanouchi) yamanouchi.push_back(k);
            if (yamanouchi.size() != 1) {
                out[partition].fail(w.to_string() + ": class of " + p.to_string() + " has " +
                                    std::to_string(yamanouchi.size()) + " Yamanouchi words");
                continue;
            }
            std::set<KeyTableau> qs;
            for (auto k : members) qs.insert(recording[k]);
            auto shape = diagram_weight(diagrams[yamanouchi.front()]);
            auto expected = standard_key_tableaux(shape);
            if (qs.size() != members.size() || qs != std::set<KeyTableau>(expected.begin(), expected.end()))
                out[partition].fail(w.to_string() + ": recording tableaux of " + p.to_string() + " are not SKT" +
                                    shape.to_string());

            ++out[knuth].cases;
            auto ck = coxeter_knuth_class(words[members.front()]);
            std::vector<ReducedWord> by_p;
            for (auto k : members) by_p.push_back(words[k]);
            if (ck != by_p) out[knuth].fail(describe(w, words[members.front()]));
        }

        // Q(d_i rho) = d_i Q(rho). Recording entries are complemented, so entry j
        // of Q marks position j from the right and the index carries over as is.
        std::map<ReducedWord, std::size_t> index;
        for (std::size_t k = 0; k < word_count; ++k) index[words[k]] = k;
        for (std::size_t k = 0; k < word_count; ++k) {
            int length = words[k].length();
            for (int i = 2; i < length; ++i) {
                ++out[dual].cases;
                auto moved = coxeter_knuth_move(words[k], i);
                if (recording[index.at(moved)] != weak_dual_move(recording[k], i))
                    out[dual].fail(describe(w, words[k]) + " position " + std::to_string(i));
            }
        }
    });
}

std::vector<CheckResult> verify_involutions(int n, Execution exec) {
    enum : std::size_t { word, diagram, balanced, knuth, dual, rank };
    const std::vector<std::string> names{"word-moves", "qrd-moves", "sbt-moves", "coxeter-knuth-moves",
                                         "weak-dual-moves", "inversion-steps"};
    return run_checks(names, all_permutations(n), exec, [](const Permutation& w, Checks& out) {
        for (const auto& rho : reduced_words(w)) {
            int inv = word_statistics(rho).inversions;
            for (int i = 1; i <= rho.length(); ++i)
                for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                    ++out[word].cases;
                    auto moved = word_move(rho, kind, i);
                    if (moved.permutation() != w || word_move(moved, kind, i) != rho)
                        out[word].fail(describe(w, rho) + " position " + std::to_string(i));
                    ++out[rank].cases;
                    int step = word_statistics(moved).inversions - inv;
                    if ((moved == rho) != (step == 0) || std::abs(step) > 1)
                        out[rank].fail(describe(w, rho) + " position " + std::to_string(i));

                    ++out[diagram].cases;
                    auto d = diagram_of_word(rho);
                    if (qrd_move(qrd_move(d, kind, i), kind, i) != d)
                        out[diagram].fail(describe(w, rho) + " position " + std::to_string(i));
                }
            for (int i = 2; i < rho.length(); ++i) {
                ++out[knuth].cases;
                if (coxeter_knuth_move(coxeter_knuth_move(rho, i), i) != rho)
                    out[knuth].fail(describe(w, rho) + " position " + std::to_string(i));
            }
        }

        for (const auto& t : enumerate_balanced(w, BalancedKind::SBT)) {
            int inv = sbt_inversions(t);
            for (int i = 1; i <= static_cast<int>(t.labels().size()); ++i)
                for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                    ++out[balanced].cases;
                    auto moved = sbt_move(t, kind, i);
                    int step = sbt_inversions(moved) - inv;
                    if (sbt_move(moved, kind, i) != t || !classify_balanced(moved).standard ||
                        (moved == t) != (step == 0) || std::abs(step) > 1)
                        out[balanced].fail(w.to_string() + " label " + std::to_string(i));
                }
        }

        // Key tableaux with the Lehmer code of w as shape.
        WeakComposition shape(lehmer_code(w));
        for (const auto& t : standard_key_tableaux(shape))
            for (int i = 2; i < t.size(); ++i) {
                ++out[dual].cases;
                auto moved = weak_dual_move(t, i);
                if (!is_standard_key_tableau(moved) || moved.shape() != t.shape() || weak_dual_move(moved, i) != t)
                    out[dual].fail(t.to_string() + " at " + std::to_string(i));
            }
    });
}

}  // namespace schubert
