#include "schubert/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schubert/insertion.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

LabeledDiagram::LabeledDiagram(std::vector<LabeledCell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t k = 1; k < cells_.size(); ++k)
        if (cells_[k - 1].cell() == cells_[k].cell()) throw std::invalid_argument("duplicate cell in diagram");
}

LabeledDiagram LabeledDiagram::from_rows(const std::vector<RowContents>& rows) {
    std::vector<LabeledCell> cells;
    for (const auto& row : rows)
        for (std::size_t k = 0; k < row.labels.size(); ++k)
            cells.push_back({row.row, static_cast<int>(k) + 1, row.labels[k]});
    return LabeledDiagram(std::move(cells));
}

std::vector<RowContents> LabeledDiagram::rows() const {
    std::vector<RowContents> out;
    for (const auto& c : cells_) {
        if (out.empty() || out.back().row != c.row) out.push_back({c.row, {}});
        out.back().labels.push_back(c.label);
    }
    return out;
}

Diagram LabeledDiagram::shape() const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const auto& c : cells_) cells.push_back(c.cell());
    return Diagram(std::move(cells));
}

std::optional<int> LabeledDiagram::label_at(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c,
                               [](const LabeledCell& x, const Cell& y) { return x.cell() < y; });
    if (it == cells_.end() || it->cell() != c) return std::nullopt;
    return it->label;
}

std::vector<int> reading_word(const LabeledDiagram& d) {
    std::vector<int> out;
    out.reserve(d.size());
    for (const auto& c : d.cells()) out.push_back(c.label);
    return out;
}

WeakComposition diagram_weight(const LabeledDiagram& d) { return d.shape().weight(); }

namespace {

struct Member {
    std::size_t row;  // index into the top-to-bottom row list
    std::size_t pos;
    int value;
};

using Group = std::vector<Member>;

// Hard constraint between two groups: -1 if a must sit left of b, 1 if right, 0 if unconstrained.
int forced_order(const Group& a, const Group& b) {
    for (const auto& x : a)
        for (const auto& y : b)
            if (x.row == y.row) return x.pos < y.pos ? -1 : 1;
    for (const auto& x : a)
        for (const auto& y : b)
            if (x.value == y.value) return x.row < y.row ? -1 : 1;
    return 0;
}

int smallest(const Group& g) { return g.back().value; }

}  // namespace

LabeledDiagram align_rows(const std::vector<RowContents>& input) {
    std::vector<RowContents> rows;
    for (const auto& r : input)
        if (!r.labels.empty()) rows.push_back(r);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.row > b.row; });
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0 && rows[r - 1].row == rows[r].row) throw std::invalid_argument("repeated row");
        for (std::size_t k = 1; k < rows[r].labels.size(); ++k)
            if (rows[r].labels[k - 1] >= rows[r].labels[k])
                throw std::invalid_argument("row " + std::to_string(rows[r].row) + " is not increasing");
    }

    std::vector<std::vector<bool>> used(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) used[r].assign(rows[r].labels.size(), false);
    auto find = [&](std::size_t r, int value) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < rows[r].labels.size(); ++k)
            if (!used[r][k] && rows[r].labels[k] == value) return k;
        return std::nullopt;
    };

    std::vector<Group> groups;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t k = 0; k < rows[r].labels.size(); ++k) {
            if (used[r][k]) continue;
            int value = rows[r].labels[k];
            used[r][k] = true;
            Group g{{r, k, value}};
            for (std::size_t s = r + 1; s < rows.size(); ++s) {
                if (auto hit = find(s, value - 1)) {
                    used[s][*hit] = true;
                    --value;
                    g.push_back({s, *hit, value});
                } else if (std::ranges::find(rows[s].labels, value) != rows[s].labels.end()) {
                    break;  // an equal entry ends the group even if already grouped
                }
            }
            groups.push_back(std::move(g));
        }
    }

    // Kahn's algorithm; among free groups the one with the smallest entries goes left.
    const std::size_t n = groups.size();
    std::vector<std::vector<std::size_t>> after(n);
    std::vector<int> pending(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            int o = forced_order(groups[x], groups[y]);
            if (o < 0) { after[x].push_back(y); ++pending[y]; }
            if (o > 0) { after[y].push_back(x); ++pending[x]; }
        }
    std::vector<int> rank(n, -1);
    for (int next = 0; next < static_cast<int>(n); ++next) {
        std::optional<std::size_t> pick;
        for (std::size_t g = 0; g < n; ++g) {
            if (rank[g] >= 0 || pending[g] > 0) continue;
            if (!pick || smallest(groups[g]) < smallest(groups[*pick]) ||
                (smallest(groups[g]) == smallest(groups[*pick]) && groups[g].front().row < groups[*pick].front().row))
                pick = g;
        }
        if (!pick) throw std::logic_error("alignment order has a cycle");
        rank[*pick] = next;
        for (auto y : after[*pick]) --pending[y];
    }

    std::vector<LabeledCell> cells;
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (const auto& m : groups[g]) cells.push_back({rows[m.row].row, rank[g] + 1, m.value});
    LabeledDiagram out(std::move(cells));
    if (out.rows() != rows) throw std::logic_error("alignment reordered a row");
    return out;
}

LabeledDiagram align(const LabeledDiagram& d) { return align_rows(d.rows()); }

LabeledDiagram diagram_of_word(const ReducedWord& word) {
    auto runs = run_decomposition(word);
    std::vector<RowContents> rows;
    for (std::size_t r = 0; r < runs.runs.size(); ++r) rows.push_back({runs.anchors[r], runs.runs[r]});
    return align_rows(rows);
}

namespace {

bool is_reduced(const LabeledDiagram& d) {
    for (const auto& row : d.rows()) {
        for (std::size_t k = 0; k < row.labels.size(); ++k) {
            if (row.labels[k] < row.row) return false;
            if (k > 0 && row.labels[k - 1] >= row.labels[k]) return false;
        }
    }
    try {
        ReducedWord word(reading_word(d));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return align(d) == d;
}

std::vector<int> columns_of_row(const LabeledDiagram& d, int row) {
    std::vector<int> cols;
    for (const auto& c : d.cells())
        if (c.row == row) cols.push_back(c.col);
    return cols;
}

KeyTableau as_key_tableau(const LabeledDiagram& d) {
    KeyTableau k;
    for (const auto& row : d.rows()) {
        if (static_cast<int>(k.rows.size()) < row.row) k.rows.resize(row.row);
        k.rows[row.row - 1] = row.labels;
    }
    return k;
}

bool columns_increase(const KeyTableau& k) {
    for (std::size_t r = 1; r < k.rows.size(); ++r) {
        const auto& upper = k.rows[r];
        for (std::size_t c = 0; c < upper.size(); ++c) {
            // A left-justified row with an entry in column c sits over a lower
            // nonempty cell only when that row is long enough.
            for (std::size_t s = r; s-- > 0;) {
                if (c < k.rows[s].size()) {
                    if (k.rows[s][c] >= upper[c]) return false;
                    break;
                }
            }
        }
    }
    return true;
}

}  // namespace

DiagramFlags classify(const LabeledDiagram& d) {
    DiagramFlags flags;
    flags.is_virtual = !d.empty() && d.cells().back().row <= 0;
    flags.reduced = is_reduced(d);
    if (!flags.reduced) return flags;

    auto rows = d.rows();
    flags.quasi_yamanouchi = true;
    flags.super_yamanouchi = true;
    for (const auto& row : rows) {
        int first = row.labels.front();
        for (std::size_t k = 1; k < row.labels.size(); ++k)
            if (row.labels[k] != row.labels[k - 1] + 1) flags.super_yamanouchi = false;
        if (first != row.row) flags.super_yamanouchi = false;
        if (first == row.row) continue;
        int first_col = columns_of_row(d, row.row).front();
        auto above = columns_of_row(d, row.row + 1);
        if (above.empty() || above.back() < first_col) flags.quasi_yamanouchi = false;
    }

    if (!flags.is_virtual) {
        auto k = as_key_tableau(d);
        if (columns_increase(k)) {
            try {
                flags.yamanouchi = lift(drop(k)) == k;
            } catch (const std::logic_error&) {
                flags.yamanouchi = false;
            }
        }
    }
    return flags;
}

LabeledDiagram destandardize(const LabeledDiagram& d) {
    LabeledDiagram current = align(d);
    while (true) {
        auto rows = current.rows();
        bool moved = false;
        for (std::size_t r = 0; r < rows.size() && !moved; ++r) {
            int index = rows[r].row;
            if (rows[r].labels.front() <= index) continue;
            auto own = columns_of_row(current, index);
            auto above = columns_of_row(current, index + 1);
            if (!above.empty() && own.front() <= above.back()) continue;
            if (r > 0 && rows[r - 1].row == index + 1) {
                rows[r - 1].labels.insert(rows[r - 1].labels.end(), rows[r].labels.begin(), rows[r].labels.end());
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
            } else {
                rows[r].row = index + 1;
            }
            moved = true;
        }
        if (!moved) return current;
        current = align_rows(rows);
    }
}

LabeledDiagram destandardization_fiber(const LabeledDiagram& c, const WeakComposition& b) {
    if (b.is_virtual() || !dominates_refines(b, diagram_weight(c)))
        throw std::invalid_argument("weight " + b.to_string() + " is not admissible");
    auto word = reading_word(c);
    std::vector<RowContents> rows;
    std::size_t next = 0;
    for (int r = b.length(); r >= 1; --r) {
        int size = b.part(r);
        if (size == 0) continue;
        RowContents row{r, {}};
        for (int k = 0; k < size; ++k) {
            int label = word.at(next++);
            if (label < r) throw std::invalid_argument("weight " + b.to_string() + " places an entry too high");
            row.labels.push_back(label);
        }
        rows.push_back(std::move(row));
    }
    auto fiber = align_rows(rows);
    if (destandardize(fiber) != c) throw std::invalid_argument("weight " + b.to_string() + " leaves the fiber");
    return fiber;
}

std::vector<LabeledDiagram> enumerate_diagrams(const Permutation& w, DiagramKind kind) {
    std::vector<LabeledDiagram> out;
    for (const auto& word : reduced_words(w)) {
        auto d = diagram_of_word(word);
        switch (kind) {
            case DiagramKind::QRD:
                out.push_back(std::move(d));
                break;
            case DiagramKind::YRD:
                if (classify(d).yamanouchi) out.push_back(std::move(d));
                break;
            case DiagramKind::RD: {
                auto weight = diagram_weight(d);
                if (weight.is_virtual()) break;
                for (const auto& b : slide_support(weight)) out.push_back(destandardization_fiber(d, b));
                break;
            }
        }
    }
    return out;
}

namespace {

// Rows indexed by row number, for the row surgery in qrd_move.
using RowMap = std::map<int, std::vector<int>, std::greater<>>;

RowMap to_map(const LabeledDiagram& d) {
    RowMap m;
    for (const auto& row : d.rows()) m[row.row] = row.labels;
    return m;
}

LabeledDiagram from_map(const RowMap& m) {
    std::vector<RowContents> rows;
    for (const auto& [r, labels] : m)
        if (!labels.empty()) rows.push_back({r, labels});
    return destandardize(align_rows(rows));
}

// Moves every row strictly below `row` down by one.
void shift_below(RowMap& m, int row) {
    RowMap shifted;
    for (auto& [r, labels] : m) shifted[r < row ? r - 1 : r] = std::move(labels);
    m = std::move(shifted);
}

[[noreturn]] void not_quasi_yamanouchi() { throw std::invalid_argument("diagram is not quasi-Yamanouchi"); }

}  // namespace

LabeledDiagram qrd_move(const LabeledDiagram& d, MoveKind kind, int i) {
    auto cells = d.cells();
    int n = static_cast<int>(cells.size());
    auto cell = [&](int m) { return cells[static_cast<std::size_t>(n - m)]; };
    auto rest_of_row = [&](const LabeledCell& c) {
        std::vector<int> rest;
        for (const auto& x : cells)
            if (x.row == c.row && x.col > c.col) rest.push_back(x.label);
        return rest;
    };

    RowMap m = to_map(d);
    if (kind == MoveKind::swap) {
        if (i < 1 || i + 1 > n) return d;
        auto a = cell(i), b = cell(i + 1);
        if (std::abs(a.label - b.label) <= 1) return d;
        auto rest = rest_of_row(a);
        auto& row_a = m[a.row];
        row_a.resize(row_a.size() - rest.size());
        if (a.row == b.row) {
            // b falls one row; everything after a falls with it.
            row_a.erase(row_a.end() - 2);
            shift_below(m, a.row);
            auto& lower = m[a.row - 1];
            lower.push_back(b.label);
            lower.insert(lower.end(), rest.begin(), rest.end());
        } else {
            if (b.label < a.label) not_quasi_yamanouchi();
            m[b.row].pop_back();
            row_a.push_back(b.label);
            shift_below(m, a.row);
            m[a.row - 1] = rest;
        }
        return from_map(m);
    }

    if (i < 2 || i + 1 > n) return d;
    auto x = cell(i + 1), y = cell(i), z = cell(i - 1);
    if (x.label != z.label || std::abs(x.label - y.label) != 1) return d;
    if (x.label == y.label + 1) {
        if (y.row == x.row || z.row != y.row || m[y.row].front() != y.label) not_quasi_yamanouchi();
        auto rest = rest_of_row(z);
        m[x.row].pop_back();
        m[y.row] = {y.label, z.label};
        shift_below(m, y.row);
        auto& lower = m[y.row - 1];
        lower.push_back(y.label);
        lower.insert(lower.end(), rest.begin(), rest.end());
    } else {
        if (x.row != y.row || z.row == y.row) not_quasi_yamanouchi();
        auto& upper = m[x.row];
        upper.resize(upper.size() - 2);
        upper.push_back(y.label);
        auto& lower = m[z.row];
        lower.erase(lower.begin());
        lower.insert(lower.begin(), {x.label, y.label});
    }
    return from_map(m);
}

LabeledDiagram left_justify(const LabeledDiagram& d) { return LabeledDiagram::from_rows(d.rows()); }

}  // namespace schubert
