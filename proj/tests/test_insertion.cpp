#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;
using fixture::key_tableau;
using fixture::running_perm;
using fixture::running_word;

namespace {

ReducedWord prefix(const ReducedWord& word, std::size_t length) {
    return ReducedWord(std::vector<int>(word.letters().begin(), word.letters().begin() + length));
}

ReducedWord shifted(const ReducedWord& word, int m) {
    std::vector<int> letters;
    for (int a : word.letters()) letters.push_back(a + m);
    return ReducedWord(letters);
}

KeyTableau as_key_tableau(const LabeledDiagram& d) {
    KeyTableau t;
    for (const auto& r : d.rows()) {
        if (static_cast<int>(t.rows.size()) < r.row) t.rows.resize(r.row);
        t.rows[r.row - 1] = r.labels;
    }
    return t;
}

// Key-deg figure, left to right.
const std::vector<KeyTableau> skt_0302{
    key_tableau({{2, {3, 2, 1}}, {4, {5, 4}}}), key_tableau({{2, {4, 2, 1}}, {4, {5, 3}}}),
    key_tableau({{2, {4, 3, 2}}, {4, {5, 1}}}), key_tableau({{2, {5, 4, 2}}, {4, {3, 1}}}),
    key_tableau({{2, {5, 4, 3}}, {4, {2, 1}}}),
};

}  // namespace

TEST_CASE("Edelman-Greene insertion of the running word") {
    // Prefix lengths after each arrow of the figure and the insertion tableau there.
    std::vector<std::pair<std::size_t, YoungTableau>> steps{
        {2, {{{5, 6}}}},
        {6, {{{3, 4, 5, 7}, {5, 6}}}},
        {7, {{{3, 4, 5, 7}, {4, 6}, {5}}}},
        {9, {{{1, 4, 5, 7}, {3, 5}, {4, 6}, {5}}}},
        {12, {{{1, 2, 3, 6}, {3, 4, 5, 7}, {4, 5}, {5, 6}}}},
    };
    for (const auto& [length, expected] : steps) CHECK(eg_insert(prefix(running_word, length)).first == expected);
    auto [p, q] = eg_insert(running_word);
    CHECK(q == YoungTableau{{{1, 2, 5, 6}, {3, 4, 11, 12}, {7, 9}, {8, 10}}});
    CHECK(p.shape() == q.shape());
    auto single = eg_insert(ReducedWord{3});
    CHECK(single.first == YoungTableau{{{3}}});
    CHECK(single.second == YoungTableau{{{1}}});
}

TEST_CASE("weak insertion of the running word") {
    std::vector<std::pair<std::size_t, KeyTableau>> steps{
        {2, key_tableau({{5, {5, 6}}})},
        {6, key_tableau({{3, {3, 4, 5, 7}}, {5, {5, 6}}})},
        {7, key_tableau({{3, {3, 4, 5, 7}}, {4, {4}}, {5, {5, 6}}})},
        {9, key_tableau({{1, {1}}, {3, {3, 4, 5, 7}}, {4, {4, 5}}, {5, {5, 6}}})},
        {12, key_tableau({{1, {1, 2, 3, 6}}, {3, {3, 4, 5, 7}}, {4, {4, 5}}, {5, {5, 6}}})},
    };
    for (const auto& [length, expected] : steps) CHECK(weak_insert(prefix(running_word, length)).first == expected);

    auto [p, q] = weak_insert(running_word);
    CHECK(p.shape() == WeakComposition{4, 0, 4, 2, 2});
    CHECK(q == key_tableau({{1, {5, 3, 2, 1}}, {3, {10, 9, 8, 7}}, {4, {6, 4}}, {5, {12, 11}}}));
    CHECK(is_standard_key_tableau(q));
    CHECK(skt_descent_composition(q).is_virtual());
    auto [p1, q1] = weak_insert(shifted(running_word, 1));
    CHECK(skt_descent_composition(q1) == WeakComposition{3, 2, 1, 4, 0, 2});
}

TEST_CASE("lift and drop") {
    CHECK(lift(YoungTableau{{{5}}}) == key_tableau({{5, {5}}}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n))
            for (const auto& rho : reduced_words(w)) {
                auto p = eg_insert(rho).first;
                auto k = lift(p);
                CHECK(drop(k) == p);
                for (std::size_t r = 0; r < k.rows.size(); ++r)
                    for (std::size_t c = 1; c < k.rows[r].size(); ++c) CHECK(k.rows[r][c - 1] < k.rows[r][c]);
            }
}

TEST_CASE("Yamanouchi words insert to their own left-justified diagram") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n))
            for (const auto& d : enumerate_diagrams(w, DiagramKind::YRD))
                CHECK(weak_insert(ReducedWord(reading_word(d))).first == as_key_tableau(left_justify(d)));
}

TEST_CASE("standard key tableaux of shape (0,3,0,2)") {
    auto all = standard_key_tableaux(WeakComposition{0, 3, 0, 2});
    CHECK(std::set<KeyTableau>(all.begin(), all.end()) == std::set<KeyTableau>(skt_0302.begin(), skt_0302.end()));
    std::vector<WeakComposition> des{{0, 3, 0, 2}, {2, 2, 0, 1}, {1, 3, 0, 1}, WeakComposition::make_virtual(), {2, 3, 0, 0}};
    for (std::size_t k = 0; k < skt_0302.size(); ++k) {
        CHECK(is_standard_key_tableau(skt_0302[k]));
        CHECK(skt_descent_composition(skt_0302[k]) == des[k]);
        CHECK(syt_to_skt(skt_to_syt(skt_0302[k]), WeakComposition{0, 3, 0, 2}) == skt_0302[k]);
    }
    CHECK(key_slide_expansion(WeakComposition{0, 3, 0, 2}) ==
          Expansion{{{0, 3, 0, 2}, 1}, {{2, 2, 0, 1}, 1}, {{1, 3, 0, 1}, 1}, {{2, 3, 0, 0}, 1}});
}

TEST_CASE("standard key tableaux are counted by hook lengths") {
    for (int length = 1; length <= 4; ++length)
        for (int total = 0; total <= 6; ++total)
            for (const auto& parts : oracle::compositions(total, length)) {
                WeakComposition a(parts);
                auto all = standard_key_tableaux(a);
                CHECK_MESSAGE(static_cast<long>(all.size()) == oracle::syt_count(parts), (a.to_string()));
                std::set<YoungTableau> images;
                for (const auto& t : all) {
                    CHECK(is_standard_key_tableau(t));
                    images.insert(skt_to_syt(t));
                }
                CHECK(images.size() == all.size());
            }
}

TEST_CASE("weak dual equivalence on SKT(0,3,0,2)") {
    const auto& t = skt_0302;
    CHECK(weak_dual_move(t[0], 3) == t[1]);
    CHECK(weak_dual_move(t[0], 4) == t[1]);
    CHECK(weak_dual_move(t[1], 2) == t[2]);
    CHECK(weak_dual_move(t[2], 4) == t[3]);
    CHECK(weak_dual_move(t[3], 2) == t[4]);
    CHECK(weak_dual_move(t[3], 3) == t[4]);
    for (const auto& x : t)
        for (int i = 2; i <= 4; ++i) CHECK(weak_dual_move(weak_dual_move(x, i), i) == x);
}

TEST_CASE("recording tableaux intertwine the two relations on R(42153)") {
    for (const auto& rho : reduced_words(Permutation::parse("42153"))) {
        const int k = rho.length();
        auto q = weak_insert(rho).second;
        CHECK(skt_descent_composition(q) == weak_descent_composition(rho));
        for (int i = 2; i < k; ++i)
            CHECK(weak_insert(coxeter_knuth_move(rho, i)).second == weak_dual_move(q, i));
    }
}

TEST_CASE("insertion tableaux separate Coxeter-Knuth classes") {
    for (const auto& w : all_permutations(4)) {
        auto words = reduced_words(w);
        for (const auto& a : words) {
            auto cls = coxeter_knuth_class(a);
            for (const auto& b : words) {
                bool same = std::binary_search(cls.begin(), cls.end(), b);
                CHECK((eg_insert(a).first == eg_insert(b).first) == same);
            }
        }
    }
}

TEST_CASE("key expansion of 41758236") {
    CHECK(key_expansion(running_perm) == Expansion{{{3, 0, 4, 2, 3}, 1}, {{5, 0, 2, 2, 3}, 1}, {{4, 0, 4, 2, 2}, 1}});
    CHECK(key_expansion(Permutation::parse("42153")) == Expansion{{{3, 1, 0, 1}, 1}, {{3, 2, 0, 0}, 1}});
}
