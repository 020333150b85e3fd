#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/diagram.hpp"

namespace schubert {

// A filling of the Rothe diagram of w. Labels follow the cells in reading order.
class BalancedTableau {
public:
    BalancedTableau() = default;
    // Throws std::invalid_argument when the label count differs from inv(w).
    BalancedTableau(const Permutation& w, std::vector<int> labels);
    // Cells must match the Rothe diagram of w.
    static BalancedTableau from_diagram(const Permutation& w, const LabeledDiagram& d);

    const Permutation& permutation() const { return w_; }
    const Diagram& shape() const { return shape_; }
    std::span<const int> labels() const { return labels_; }
    int label_at(Cell c) const;
    LabeledDiagram as_labeled() const;
    // Number of cells carrying each label.
    WeakComposition weight() const;

    friend bool operator==(const BalancedTableau& a, const BalancedTableau& b) {
        return a.w_ == b.w_ && a.labels_ == b.labels_;
    }
    friend auto operator<=>(const BalancedTableau& a, const BalancedTableau& b) { return a.labels_ <=> b.labels_; }

private:
    Permutation w_;
    Diagram shape_;
    std::vector<int> labels_;
};

struct CellBalanceStats {
    int arm_greater = 0;       // A: arm entries > label
    int arm_weakly_greater = 0;  // a: arm entries >= label
    int leg_less = 0;          // L: leg entries < label
    int leg_weakly_less = 0;   // l: leg entries <= label
};

// Arm: cells right in the same row. Leg: cells above in the same column.
CellBalanceStats cell_stats(const BalancedTableau& t, Cell c);

struct BalanceFlags {
    bool standard = false;
    bool semi_standard = false;
    bool quasi_yamanouchi = false;
    bool super_yamanouchi = false;
};

BalanceFlags classify_balanced(const BalancedTableau& t);

enum class BalancedKind { SBT, SSBT, QBT };
// Sorted by label sequence.
std::vector<BalancedTableau> enumerate_balanced(const Permutation& w, BalancedKind kind);

// Swap exchanges i and i+1; braid exchanges i-1 and i+1 around i.
BalancedTableau sbt_move(const BalancedTableau& t, MoveKind kind, int i);

// Pairs i < j with i strictly higher and in a different column.
int sbt_inversions(const BalancedTableau& t);
// inv(v(t)) minus the co-inversions inside each row.
int sbt_inversions_by_rows(const BalancedTableau& t);
Permutation sbt_permutation(const BalancedTableau& t);

enum class AscendLevel { QRD_to_SBT, RD_to_SSBT };
// Picks one of `count` inversion-reducing moves, listed by position then kind.
using MoveChooser = std::function<std::size_t(std::size_t count)>;
// Follows a minimal move sequence to the super-Yamanouchi word, taking the
// first candidate unless a chooser is given. Throws std::invalid_argument
// when d is outside the stated class.
BalancedTableau ascend(const LabeledDiagram& d, AscendLevel level, const MoveChooser& choose = {});

}  // namespace schubert
