#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;
using fixture::row_contents;
using fixture::running_perm;
using fixture::running_word;
using fixture::word_from_digits;

using Rows = std::vector<std::pair<int, std::vector<int>>>;

TEST_CASE("diagram of the running word") {
    auto d = diagram_of_word(running_word);
    CHECK(row_contents(d) == Rows{{5, {5, 6}}, {3, {3, 4, 5, 7}}, {2, {3}}, {1, {1, 4}}, {0, {2, 3, 6}}});
    CHECK(reading_word(d) == std::vector<int>(running_word.letters().begin(), running_word.letters().end()));
    auto flags = classify(d);
    CHECK(flags.reduced);
    CHECK(flags.quasi_yamanouchi);
    CHECK(flags.is_virtual);
    CHECK_FALSE(flags.yamanouchi);
    CHECK(diagram_weight(d).is_virtual());
}

TEST_CASE("alignment stacks descending chains into shared columns") {
    auto d = diagram_of_word(running_word);
    // 5 over 4 over 3 and 6 over 5 over 4 over 3 share columns.
    auto column_of = [&](int row, int label) {
        for (const auto& c : d.cells())
            if (c.row == row && c.label == label) return c.col;
        return -1;
    };
    CHECK(column_of(5, 5) == column_of(3, 4));
    CHECK(column_of(3, 4) == column_of(2, 3));
    CHECK(column_of(2, 3) == column_of(0, 2));
    CHECK(column_of(5, 6) == column_of(3, 5));
    CHECK(column_of(1, 4) == column_of(0, 3));
    CHECK(column_of(3, 3) < column_of(3, 4));
    CHECK(align(d) == d);
    CHECK(diagram_of_word(ReducedWord{}).empty());
}

TEST_CASE("super-Yamanouchi diagram") {
    auto d = diagram_of_word(super_yamanouchi_word(running_perm));
    CHECK(row_contents(d) == Rows{{5, {5, 6, 7}}, {4, {4, 5}}, {3, {3, 4, 5, 6}}, {1, {1, 2, 3}}});
    CHECK(classify(d).super_yamanouchi);
    CHECK(classify(d).quasi_yamanouchi);
}

TEST_CASE("Yamanouchi diagrams for 42153") {
    auto yrd = enumerate_diagrams(Permutation::parse("42153"), DiagramKind::YRD);
    std::set<std::vector<int>> words;
    for (const auto& d : yrd) {
        words.insert(reading_word(d));
        CHECK(classify(d).yamanouchi);
        CHECK(classify(d).quasi_yamanouchi);
        CHECK_FALSE(classify(d).is_virtual);
    }
    CHECK(words == std::set<std::vector<int>>{{4, 2, 1, 2, 3}, {2, 4, 1, 2, 3}});
    auto first = diagram_of_word(ReducedWord{4, 2, 1, 2, 3});
    CHECK(row_contents(left_justify(first)) == Rows{{4, {4}}, {2, {2}}, {1, {1, 2, 3}}});
    auto justified = left_justify(first);
    for (const auto& c : justified.cells()) CHECK(c.col <= 3);
}

TEST_CASE("Yamanouchi diagrams for the running permutation") {
    std::set<WeakComposition> weights;
    for (const auto& d : enumerate_diagrams(running_perm, DiagramKind::YRD)) weights.insert(diagram_weight(d));
    CHECK(weights == std::set<WeakComposition>{{3, 0, 4, 2, 3}, {5, 0, 2, 2, 3}, {4, 0, 4, 2, 2}});
}

TEST_CASE("destandardization of diagrams with reading word 35234") {
    ReducedWord rho{3, 5, 2, 3, 4};
    auto top = diagram_of_word(rho);
    CHECK(row_contents(top) == Rows{{3, {3, 5}}, {2, {2, 3, 4}}});
    // The six diagrams of the fiber, rows given top down.
    std::vector<std::vector<RowContents>> fiber{
        {{3, {3, 5}}, {2, {2, 3, 4}}},       {{3, {3, 5}}, {2, {2, 3}}, {1, {4}}}, {{3, {3, 5}}, {2, {2}}, {1, {3, 4}}},
        {{3, {3, 5}}, {1, {2, 3, 4}}},       {{3, {3}}, {2, {5}}, {1, {2, 3, 4}}}, {{2, {3, 5}}, {1, {2, 3, 4}}},
    };
    Polynomial weights;
    for (const auto& rows : fiber) {
        auto d = align_rows(rows);
        CHECK(classify(d).reduced);
        CHECK(destandardize(d) == top);
        CHECK(destandardization_fiber(top, diagram_weight(d)) == d);
        weights.add_term(diagram_weight(d), 1);
    }
    CHECK(weights == fundamental_slide(diagram_weight(top)));
    CHECK(destandardize(top) == top);
    CHECK_THROWS_AS(destandardization_fiber(top, WeakComposition{5}), std::invalid_argument);
}

TEST_CASE("destandardization is idempotent and its fibers carry slide polynomials") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            std::map<LabeledDiagram, Polynomial> by_top;
            for (const auto& d : enumerate_diagrams(w, DiagramKind::RD)) {
                auto top = destandardize(d);
                CHECK(destandardize(top) == top);
                CHECK(classify(top).quasi_yamanouchi);
                by_top[top].add_term(diagram_weight(d), 1);
            }
            for (const auto& [top, p] : by_top) CHECK(p == fundamental_slide(diagram_weight(top)));
        }
}

TEST_CASE("diagram counts") {
    CHECK(enumerate_diagrams(Permutation::parse("42153"), DiagramKind::QRD).size() == 11);
    CHECK(enumerate_diagrams(Permutation::parse("153264"), DiagramKind::RD).size() == 26);
}

TEST_CASE("reading word and diagram are inverse bijections") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            auto words = reduced_words(w);
            auto qrd = enumerate_diagrams(w, DiagramKind::QRD);
            REQUIRE(qrd.size() == words.size());
            for (std::size_t k = 0; k < words.size(); ++k) {
                auto d = diagram_of_word(words[k]);
                CHECK(d == qrd[k]);
                CHECK(ReducedWord(reading_word(d)) == words[k]);
                CHECK(diagram_weight(d) == weak_descent_composition(words[k]));
                CHECK(classify(d).super_yamanouchi == is_super_yamanouchi(words[k]));
                bool low = !d.empty() && d.cells().back().row <= 0;
                CHECK(low == diagram_weight(d).is_virtual());
            }
        }
}

TEST_CASE("reduced diagrams generate Schubert polynomials") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            Polynomial p;
            for (const auto& d : enumerate_diagrams(w, DiagramKind::RD)) p.add_term(diagram_weight(d), 1);
            CHECK_MESSAGE(p == schubert_by_divided_differences(w), (w.to_string()));
        }
}

TEST_CASE("diagram moves follow word moves") {
    auto pi = super_yamanouchi_word(running_perm);
    auto d = diagram_of_word(pi);
    auto follow = [&](MoveKind kind, int i) {
        d = qrd_move(d, kind, i);
        pi = word_move(pi, kind, i);
        CHECK(d == diagram_of_word(pi));
        CHECK(classify(d).quasi_yamanouchi);
    };
    for (int i : {3, 2, 1, 7}) follow(MoveKind::swap, i);
    CHECK(row_contents(d) == Rows{{5, {5, 6, 7}}, {4, {4}}, {3, {3, 5}}, {2, {4, 5}}, {1, {1, 2, 3, 6}}});
    follow(MoveKind::braid, 6);
    CHECK(row_contents(d) == Rows{{5, {5, 6, 7}}, {4, {4}}, {3, {3, 4, 5}}, {2, {4}}, {1, {1, 2, 3, 6}}});
    follow(MoveKind::braid, 8);
    CHECK(row_contents(d) == Rows{{5, {5, 6, 7}}, {3, {3, 4}}, {2, {3, 5}}, {1, {4}}, {0, {1, 2, 3, 6}}});
    follow(MoveKind::swap, 6);
    CHECK(row_contents(d) == Rows{{5, {5, 6, 7}}, {3, {3, 4, 5}}, {2, {3, 4}}, {1, {1, 2, 3, 6}}});
    for (int i : {4, 9, 8, 7}) follow(MoveKind::swap, i);
    CHECK(d == diagram_of_word(running_word));
}

TEST_CASE("diagram moves are involutions on QRD(42153)") {
    for (const auto& d : enumerate_diagrams(Permutation::parse("42153"), DiagramKind::QRD))
        for (int i = 1; i <= 5; ++i)
            for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                auto moved = qrd_move(d, kind, i);
                CHECK(qrd_move(moved, kind, i) == d);
                CHECK(ReducedWord(reading_word(moved)) == word_move(ReducedWord(reading_word(d)), kind, i));
            }
}

TEST_CASE("left justification") {
    auto aligned = align_rows({{3, {3, 4}}, {1, {1, 2}}});
    CHECK(row_contents(aligned) == Rows{{3, {3, 4}}, {1, {1, 2}}});
    CHECK(aligned.label_at({3, 2}) == 3);
    CHECK(aligned.label_at({1, 2}) == 2);
    auto key = left_justify(aligned);
    CHECK(key.label_at({3, 1}) == 3);
    CHECK(left_justify(key) == key);
    auto d = align_rows({{5, {5, 6, 7}}, {4, {4, 5}}, {3, {3, 4}}, {1, {1, 2, 3, 5, 6}}});
    CHECK(left_justify(d).shape() == key_diagram(WeakComposition{5, 0, 2, 2, 3}));
}
