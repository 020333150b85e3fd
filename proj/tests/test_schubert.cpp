#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "schubert/diagram.hpp"
#include "schubert/schubert.hpp"
#include "schubert/serialize.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

Polynomial monomial(std::vector<int> e, Coefficient c = 1) { return Polynomial::monomial(WeakComposition(std::move(e)), c); }

}  // namespace

TEST_CASE("strategy names round trip") {
    for (auto s : all_strategies) CHECK(parse_strategy(strategy_name(s)) == s);
    CHECK_FALSE(parse_strategy("nope").has_value());
}

TEST_CASE("Schubert polynomial of 42153 under every strategy") {
    auto expected = monomial({3, 1, 0, 1}) + monomial({3, 1, 1}) + monomial({3, 2});
    for (auto s : all_strategies) {
        CHECK_MESSAGE(schubert_polynomial(Permutation::parse("42153"), s) == expected, (strategy_name(s)));
        CHECK(schubert_polynomial(Permutation::parse("42153"), s, Execution::parallel) == expected);
        CHECK(schubert_polynomial(Permutation::identity(4), s) == Polynomial::constant(1));
    }
}

TEST_CASE("Schubert polynomial of 153264") {
    auto p = schubert_polynomial(Permutation::parse("153264"), Strategy::CompatibleSequences);
    CHECK(p.term_count() == 23);
    CHECK(p.coefficient_sum() == 26);
    CHECK(slide_expansion(Permutation::parse("153264")) == Expansion{{{0, 3, 1, 0, 1}, 1},
                                                                      {{2, 2, 0, 0, 1}, 1},
                                                                      {{1, 3, 0, 0, 1}, 1},
                                                                      {{0, 3, 2, 0, 0}, 1},
                                                                      {{2, 2, 1, 0, 0}, 1},
                                                                      {{1, 3, 1, 0, 0}, 1},
                                                                      {{2, 3, 0, 0, 0}, 1}});
    for (const auto& [e, c] : p.terms()) CHECK(c > 0);
}

TEST_CASE("slide terms with leading zeros come from the unshifted permutation") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            Expansion shifted;
            for (const auto& [a, c] : slide_expansion(w)) shifted[shift(a, 2)] = c;
            Expansion leading_zero;
            for (const auto& [a, c] : slide_expansion(shift(w, 2)))
                if (a.part(1) == 0 && a.part(2) == 0) leading_zero[a] = c;
            CHECK(leading_zero == shifted);
        }
}

TEST_CASE("the divided-difference oracle does not depend on the word") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            auto u = w.inverse() * Permutation::longest(n);
            auto expected = schubert_by_divided_differences(w);
            for (const auto& word : reduced_words(u)) {
                auto p = staircase_monomial(n);
                for (int a : word.letters()) p = divided_difference(p, a);
                CHECK(p == expected);
            }
        }
}

TEST_CASE("key expansions sum to the Schubert polynomial") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            if (w == Permutation::parse("25143")) continue;
            CHECK_MESSAGE(key_expansion(w) == oracle::key_decomposition(schubert_by_divided_differences(w)),
                          (w.to_string()));
        }
}

TEST_CASE("the Yamanouchi key expansion misses a class for 25143") {
    auto w = Permutation::parse("25143");
    CHECK(oracle::key_decomposition(schubert_by_divided_differences(w)) ==
          Expansion{{{1, 3, 0, 1}, 1}, {{2, 3}, 1}});
    // The class of EG tableau [134/24] lifts to shape (3,2) although its words
    // carry descent compositions (2,3) and (3,2).
    CHECK(key_expansion(w) == Expansion{{{1, 3, 0, 1}, 1}, {{3, 2}, 1}});
    for (const auto& d : enumerate_diagrams(w, DiagramKind::QRD))
        if (diagram_weight(d) == WeakComposition{2, 3}) CHECK_FALSE(classify(d).yamanouchi);
}

TEST_CASE("key polynomials agree across strategies") {
    for (int length = 1; length <= 3; ++length)
        for (int total = 0; total <= 4; ++total) {
            std::vector<int> parts(length, 0);
            auto visit = [&](auto&& self, int index, int left) -> void {
                if (index == length) {
                    if (left == 0) {
                        WeakComposition a(parts);
                        CHECK(key_polynomial(a, KeyStrategy::SKT) == key_polynomial(a, KeyStrategy::Kohnert));
                    }
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    parts[index] = v;
                    self(self, index + 1, left - v);
                }
            };
            visit(visit, 0, total);
        }
}

TEST_CASE("verification suites pass on S_4") {
    auto perms = all_permutations(4);
    auto serial = verify_cross_model(perms, Execution::serial);
    auto parallel = verify_cross_model(perms, Execution::parallel);
    CHECK(all_passed(serial));
    CHECK(serial.size() == all_strategies.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k].cases == 24);
        CHECK(serial[k].passed == parallel[k].passed);
    }
    for (const auto& r : verify_bijections(4)) CHECK_MESSAGE(r.passed, (r.name + ": " + r.counterexample));
    for (const auto& r : verify_involutions(4)) CHECK_MESSAGE(r.passed, (r.name + ": " + r.counterexample));
}

TEST_CASE("sampled permutations are reproducible") {
    auto a = sample_permutations(6, 50, 42);
    CHECK(a.size() == 50);
    CHECK(a == sample_permutations(6, 50, 42));
    CHECK(std::set<Permutation>(a.begin(), a.end()).size() == 50);
    CHECK(sample_permutations(3, 100, 1).size() == 6);
}

TEST_CASE("serialization") {
    auto p = schubert_polynomial(Permutation::parse("42153"), Strategy::SlideWords);
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(to_json(p).dump() ==
          R"([{"coefficient":1,"exponents":[3,2]},{"coefficient":1,"exponents":[3,1,1]},{"coefficient":1,"exponents":[3,1,0,1]}])");
    CHECK(to_json(WeakComposition::make_virtual()) == "virtual");
    CHECK(expansion_text(key_expansion(Permutation::parse("42153")), "k", 4) == "k(3,1,0,1) + k(3,2,0,0)");
    CHECK(expansion_text(Expansion{}, "k", 2) == "0");
    auto d = diagram_of_word(ReducedWord{4, 2, 1, 2, 3});
    CHECK(labeled_diagram_from_json(to_json(d)) == d);
    CHECK(render_art(d) == "| . . 4\n| . . .\n| 2 . .\n| 1 2 3\n+------\n");
}
