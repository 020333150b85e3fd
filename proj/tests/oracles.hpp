#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "schubert/balanced.hpp"
#include "schubert/core.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/redword.hpp"
#include "schubert/schubert.hpp"

namespace oracle {

using namespace schubert;

// Shortest path in the graph whose edges are nontrivial swaps and braids.
inline int move_distance(const ReducedWord& from, const ReducedWord& to) {
    std::map<ReducedWord, int> dist{{from, 0}};
    std::queue<ReducedWord> queue;
    queue.push(from);
    while (!queue.empty()) {
        auto current = queue.front();
        queue.pop();
        int d = dist[current];
        if (current == to) return d;
        for (int i = 1; i <= current.length(); ++i)
            for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                auto next = word_move(current, kind, i);
                if (dist.emplace(next, d + 1).second) queue.push(next);
            }
    }
    return -1;
}

// Same search on standard balanced tableaux.
inline int tableau_distance(const BalancedTableau& from, const BalancedTableau& to) {
    std::map<BalancedTableau, int> dist{{from, 0}};
    std::queue<BalancedTableau> queue;
    queue.push(from);
    while (!queue.empty()) {
        auto current = queue.front();
        queue.pop();
        int d = dist[current];
        if (current == to) return d;
        for (int i = 1; i <= static_cast<int>(current.labels().size()); ++i)
            for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                auto next = sbt_move(current, kind, i);
                if (dist.emplace(next, d + 1).second) queue.push(next);
            }
    }
    return -1;
}

// Every weak composition of `total` with exactly `length` parts.
inline std::vector<std::vector<int>> compositions(int total, int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(length, 0);
    auto fill = [&](auto&& self, int index, int left) -> void {
        if (index == length - 1) {
            current[index] = left;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            current[index] = v;
            self(self, index + 1, left - v);
        }
    };
    if (length == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    fill(fill, 0, total);
    return out;
}

// Slide polynomial straight from the definition: prefix sums dominate and
// consecutive blocks of flat(b) sum to the parts of flat(a).
inline Polynomial slide_by_definition(const std::vector<int>& a) {
    Polynomial p;
    int total = std::accumulate(a.begin(), a.end(), 0);
    std::vector<int> flat_a;
    for (int x : a)
        if (x > 0) flat_a.push_back(x);
    for (const auto& b : compositions(total, static_cast<int>(a.size()))) {
        bool dominates = true;
        int sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            sa += a[i];
            sb += b[i];
            if (sb < sa) dominates = false;
        }
        std::size_t block = 0;
        int acc = 0;
        bool refines = true;
        for (int x : b) {
            if (x == 0) continue;
            acc += x;
            if (block >= flat_a.size() || acc > flat_a[block]) {
                refines = false;
                break;
            }
            if (acc == flat_a[block]) ++block, acc = 0;
        }
        refines = refines && block == flat_a.size();
        if (dominates && refines) p.add_term(b, 1);
    }
    return p;
}

// Hook length formula for standard Young tableaux of a partition.
inline long syt_count(std::vector<int> partition) {
    std::erase(partition, 0);
    std::sort(partition.rbegin(), partition.rend());
    int n = std::accumulate(partition.begin(), partition.end(), 0);
    long numerator = 1;
    for (int k = 2; k <= n; ++k) numerator *= k;
    long hooks = 1;
    for (std::size_t r = 0; r < partition.size(); ++r)
        for (int c = 0; c < partition[r]; ++c) {
            int arm = partition[r] - c - 1;
            int leg = 0;
            for (std::size_t s = r + 1; s < partition.size() && partition[s] > c; ++s) ++leg;
            hooks *= arm + leg + 1;
        }
    return numerator / hooks;
}

// Key expansion by peeling: the monomial whose exponent carries the most mass
// to the right is always the leading term of some key polynomial, since Kohnert
// moves only shift mass to lower indices.
inline std::map<WeakComposition, Coefficient> key_decomposition(Polynomial p) {
    std::map<WeakComposition, Coefficient> out;
    while (!p.is_zero()) {
        auto terms = p.terms();
        auto rightmost = [](const WeakComposition& a, const WeakComposition& b) {
            int n = std::max(a.length(), b.length());
            for (int i = n; i >= 1; --i)
                if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
            return false;
        };
        auto lead = std::max_element(terms.begin(), terms.end(),
                                     [&](const auto& x, const auto& y) { return rightmost(x.first, y.first); });
        auto [a, c] = *lead;
        out[a] += c;
        p -= key_polynomial(a, KeyStrategy::Kohnert) * Polynomial::constant(c);
    }
    return out;
}

}  // namespace oracle
