#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/redword.hpp"

namespace schubert {

// French convention: rows[0] is the bottom row, each row left-justified.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    std::vector<int> shape() const;
    int size() const;
    std::string to_string() const;
    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
    friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;
};

// rows[r-1] holds row r, left-justified; empty rows are allowed.
struct KeyTableau {
    std::vector<std::vector<int>> rows;

    WeakComposition shape() const;
    int size() const;
    // Entries left to right, top row first.
    std::vector<int> reading_word() const;
    std::string to_string() const;
    void trim();
    friend bool operator==(const KeyTableau&, const KeyTableau&) = default;
    friend auto operator<=>(const KeyTableau&, const KeyTableau&) = default;
};

// Edelman-Greene insertion of the printed word, left to right. Q records the
// insertion step 1..k of each new cell.
std::pair<YoungTableau, YoungTableau> eg_insert(const ReducedWord& word);

// Raises column entries to form a key tableau; throws std::logic_error when
// some entry has no admissible row.
KeyTableau lift(const YoungTableau& p);
// Lets every column fall to the bottom.
YoungTableau drop(const KeyTableau& k);

// Weak insertion tableau and standard key recording tableau.
std::pair<KeyTableau, KeyTableau> weak_insert(const ReducedWord& word);

// All standard key tableaux of shape a, in lexicographic order of rows.
std::vector<KeyTableau> standard_key_tableaux(const WeakComposition& a);
bool is_standard_key_tableau(const KeyTableau& t);
WeakComposition skt_descent_composition(const KeyTableau& t);

// SKT(a) -> SYT(sort(a)): drop, sort columns, complement entries.
YoungTableau skt_to_syt(const KeyTableau& t);
// Inverse of skt_to_syt on the given shape; throws std::invalid_argument
// when no standard key tableau of shape a maps to s.
KeyTableau syt_to_skt(const YoungTableau& s, const WeakComposition& a);

// Weak dual equivalence move on i-1, i, i+1; returns t when it acts trivially.
KeyTableau weak_dual_move(const KeyTableau& t, int i);

}  // namespace schubert
