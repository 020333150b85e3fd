#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert/core.hpp"

namespace schubert {

// Letters are stored left to right as printed. Position j counts from the
// right end: at(1) is the last printed letter. Reading the printed word left
// to right and swapping positions a, a+1 for each letter a sorts the
// permutation to the identity.
class ReducedWord {
public:
    ReducedWord() = default;
    // Throws std::invalid_argument when the word is not reduced.
    explicit ReducedWord(std::vector<int> letters);
    ReducedWord(std::initializer_list<int> letters) : ReducedWord(std::vector<int>(letters)) {}
    static ReducedWord parse(std::string_view text);

    std::span<const int> letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    // Position from the right, 1-based.
    int at(int j) const { return letters_[letters_.size() - static_cast<std::size_t>(j)]; }
    const Permutation& permutation() const { return permutation_; }

    std::string to_string() const;

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) { return a.letters_ == b.letters_; }
    friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) { return a.letters_ <=> b.letters_; }

private:
    std::vector<int> letters_;
    Permutation permutation_;
};

// Lexicographic in printed form.
std::vector<ReducedWord> reduced_words(const Permutation& w);

struct RunDecomposition {
    // Maximal increasing runs in printed order, so runs.front() is the
    // leftmost run and runs.back() the rightmost.
    std::vector<std::vector<int>> runs;
    // Anchor row of each run, aligned with runs.
    std::vector<int> anchors;

    std::string to_string() const;
};

RunDecomposition run_decomposition(const ReducedWord& word);
WeakComposition weak_descent_composition(const ReducedWord& word);
// Each sequence is listed by position from the right: entry 0 pairs with at(1).
std::vector<StrongComposition> compatible_sequences(const ReducedWord& word);
// Exponent vector counting the entries of a compatible sequence.
WeakComposition sequence_weight(const StrongComposition& alpha);

ReducedWord super_yamanouchi_word(const Permutation& w);
// Every run is an interval and first letters of runs strictly decrease.
bool is_super_yamanouchi(const ReducedWord& word);

enum class MoveKind { swap, braid };

// Swap exchanges positions i and i+1; braid rewrites positions i+1, i, i-1.
// Inapplicable moves return the input unchanged.
ReducedWord word_move(const ReducedWord& word, MoveKind kind, int i);
bool move_applies(const ReducedWord& word, MoveKind kind, int i);

struct WordStatistics {
    // v[i-1] is the position in the target word paired with position i of
    // the reference word, both counted from the right.
    Permutation pairing;
    int inversions = 0;
};

WordStatistics word_statistics(const ReducedWord& word);
// Pairing of target against an arbitrary reference in the same R(w).
WordStatistics word_statistics(const ReducedWord& reference, const ReducedWord& target);
// Fewest swaps and braids turning a into b (breadth-first search).
int word_metric(const ReducedWord& a, const ReducedWord& b);
// inv(v(from, to)) - |sum(from) - sum(to)| with from as the pairing reference.
// Empty when the pairing scan leaves a letter unmatched. Agrees with
// word_metric when from is super-Yamanouchi, not in general.
std::optional<int> pairing_metric(const ReducedWord& from, const ReducedWord& to);

// Coxeter-Knuth relation at position i, 1 < i < length.
ReducedWord coxeter_knuth_move(const ReducedWord& word, int i);
std::vector<ReducedWord> coxeter_knuth_class(const ReducedWord& word);

}  // namespace schubert
