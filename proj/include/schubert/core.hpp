#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// One-line notation over {1..n}. Trailing fixed points are ignored by
// equality, so w and w x 1 compare equal as elements of S_infinity.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);
    // Accepts "4,2,1,5,3" or, for n <= 9, the compact form "42153".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    // 1-based; positions past the end are fixed points.
    int operator()(int position) const;
    std::span<const int> values() const { return values_; }

    Permutation inverse() const;
    // Composition as functions: (u * v)(j) = u(v(j)).
    Permutation operator*(const Permutation& rhs) const;
    // Right multiplication by s_i, i.e. exchange positions i and i+1.
    Permutation times_simple(int i) const;
    Permutation trimmed() const;
    Permutation padded(int n) const;

    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b);
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

private:
    std::vector<int> values_;
};

int inversions(const Permutation& w);
std::vector<int> lehmer_code(const Permutation& w);
// 1^m x w: prepend m fixed points and add m to every value.
Permutation shift(const Permutation& w, int m);
// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

using StrongComposition = std::vector<int>;

// Parts are stored with trailing zeros removed. The virtual value stands for
// the empty descent composition of virtual objects.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);
    WeakComposition(std::initializer_list<int> parts);

    static WeakComposition make_virtual();
    static WeakComposition parse(std::string_view text);

    bool is_virtual() const { return virtual_; }
    std::span<const int> parts() const { return parts_; }
    // 1-based; zero beyond the stored length.
    int part(int i) const;
    int length() const { return static_cast<int>(parts_.size()); }
    int total() const;
    std::vector<int> padded(int n) const;
    std::string to_string(int min_length = 0) const;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend std::strong_ordering operator<=>(const WeakComposition& a, const WeakComposition& b);

private:
    bool virtual_ = false;
    std::vector<int> parts_;
};

WeakComposition shift(const WeakComposition& a, int m);
StrongComposition flatten(const WeakComposition& a);
// Prefix sums of b dominate those of a and flat(b) refines flat(a).
bool dominates_refines(const WeakComposition& b, const WeakComposition& a);
// Sum of parts: the length-n vector sorted into a partition.
std::vector<int> sorted_partition(const WeakComposition& a);

struct Cell {
    int row = 0;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    // Reading order: top row first, left to right.
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
        if (a.row != b.row) return b.row <=> a.row;
        return a.col <=> b.col;
    }
};

class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);

    std::span<const Cell> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;
    void insert(Cell c);
    void erase(Cell c);

    // Virtual when some cell sits in row <= 0.
    WeakComposition weight() const;
    int lowest_row() const;
    int highest_row() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    std::vector<Cell> cells_;  // kept in reading order
};

Diagram rothe_diagram(const Permutation& w);
Diagram key_diagram(const WeakComposition& a);

struct DiagramHash {
    std::size_t operator()(const Diagram& d) const noexcept;
};

}  // namespace schubert

template <>
struct std::hash<schubert::WeakComposition> {
    std::size_t operator()(const schubert::WeakComposition& a) const noexcept;
};
