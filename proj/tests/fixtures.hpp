#pragma once

// Small builders shared by the tests.

#include <map>
#include <vector>

#include "schubert/balanced.hpp"
#include "schubert/core.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/redword.hpp"

namespace fixture {

using namespace schubert;

// Running example throughout the tests.
inline const ReducedWord running_word{5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6};
inline const Permutation running_perm = Permutation::parse("41758236");

// Balanced tableau given by its rows from the top down, each left to right.
inline BalancedTableau balanced(const Permutation& w, const std::vector<std::vector<int>>& rows_top_down) {
    std::vector<int> labels;
    for (const auto& row : rows_top_down) labels.insert(labels.end(), row.begin(), row.end());
    return BalancedTableau(w, labels);
}

// Key tableau from (row, entries) pairs.
inline KeyTableau key_tableau(const std::map<int, std::vector<int>>& rows) {
    KeyTableau t;
    for (const auto& [row, entries] : rows) {
        if (static_cast<int>(t.rows.size()) < row) t.rows.resize(row);
        t.rows[row - 1] = entries;
    }
    return t;
}

// Row contents of a labeled diagram as (row, labels) from the top down.
inline std::vector<std::pair<int, std::vector<int>>> row_contents(const LabeledDiagram& d) {
    std::vector<std::pair<int, std::vector<int>>> out;
    for (const auto& r : d.rows()) out.emplace_back(r.row, r.labels);
    return out;
}

inline ReducedWord word_from_digits(std::string_view digits) {
    std::vector<int> letters;
    for (char c : digits) letters.push_back(c - '0');
    return ReducedWord(letters);
}

}  // namespace fixture
