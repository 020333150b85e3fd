#pragma once

#include <optional>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/redword.hpp"

namespace schubert {

struct LabeledCell {
    int row = 0;
    int col = 1;
    int label = 0;

    Cell cell() const { return {row, col}; }
    friend bool operator==(const LabeledCell&, const LabeledCell&) = default;
    friend std::strong_ordering operator<=>(const LabeledCell& a, const LabeledCell& b) {
        if (auto c = a.cell() <=> b.cell(); c != 0) return c;
        return a.label <=> b.label;
    }
};

// One nonempty row: its index and its labels from left to right.
struct RowContents {
    int row = 0;
    std::vector<int> labels;

    friend bool operator==(const RowContents&, const RowContents&) = default;
};

class LabeledDiagram {
public:
    LabeledDiagram() = default;
    explicit LabeledDiagram(std::vector<LabeledCell> cells);
    // Rows placed left-justified; callers align afterwards when needed.
    static LabeledDiagram from_rows(const std::vector<RowContents>& rows);

    std::span<const LabeledCell> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    // Nonempty rows from top to bottom.
    std::vector<RowContents> rows() const;
    Diagram shape() const;
    std::optional<int> label_at(Cell c) const;

    friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
    friend auto operator<=>(const LabeledDiagram&, const LabeledDiagram&) = default;

private:
    std::vector<LabeledCell> cells_;  // reading order
};

// Labels read left to right, top to bottom.
std::vector<int> reading_word(const LabeledDiagram& d);
WeakComposition diagram_weight(const LabeledDiagram& d);

// Groups cells into descending value chains and gives group k column k.
// Throws std::invalid_argument when some row is not strictly increasing.
LabeledDiagram align(const LabeledDiagram& d);
LabeledDiagram align_rows(const std::vector<RowContents>& rows);

LabeledDiagram diagram_of_word(const ReducedWord& word);

struct DiagramFlags {
    bool reduced = false;
    bool quasi_yamanouchi = false;
    bool super_yamanouchi = false;
    bool yamanouchi = false;
    bool is_virtual = false;
};

DiagramFlags classify(const LabeledDiagram& d);

LabeledDiagram destandardize(const LabeledDiagram& d);
// The unique reduced diagram of weight b that de-standardizes to c.
// Throws std::invalid_argument when b is not admissible for c.
LabeledDiagram destandardization_fiber(const LabeledDiagram& c, const WeakComposition& b);

enum class DiagramKind { QRD, RD, YRD };
// QRD lists every diagram of a word, ordered like reduced_words(w). RD lists
// the non-virtual reduced diagrams only, since virtual ones are unbounded.
std::vector<LabeledDiagram> enumerate_diagrams(const Permutation& w, DiagramKind kind);

// Cell index i counts in reverse reading order. Inapplicable moves return d.
LabeledDiagram qrd_move(const LabeledDiagram& d, MoveKind kind, int i);

LabeledDiagram left_justify(const LabeledDiagram& d);

}  // namespace schubert
