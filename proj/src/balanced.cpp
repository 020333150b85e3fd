#include "schubert/balanced.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/guard.hpp"

namespace schubert {

BalancedTableau::BalancedTableau(const Permutation& w, std::vector<int> labels)
    : w_(w.trimmed()), shape_(rothe_diagram(w)), labels_(std::move(labels)) {
    if (labels_.size() != shape_.size()) throw std::invalid_argument("label count does not match the Rothe diagram");
}

BalancedTableau BalancedTableau::from_diagram(const Permutation& w, const LabeledDiagram& d) {
    if (d.shape() != rothe_diagram(w)) throw std::invalid_argument("cells do not form the Rothe diagram");
    return BalancedTableau(w, reading_word(d));
}

int BalancedTableau::label_at(Cell c) const {
    auto cells = shape_.cells();
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) throw std::out_of_range("cell outside the Rothe diagram");
    return labels_[static_cast<std::size_t>(it - cells.begin())];
}

LabeledDiagram BalancedTableau::as_labeled() const {
    std::vector<LabeledCell> cells;
    for (std::size_t k = 0; k < labels_.size(); ++k)
        cells.push_back({shape_.cells()[k].row, shape_.cells()[k].col, labels_[k]});
    return LabeledDiagram(std::move(cells));
}

WeakComposition BalancedTableau::weight() const {
    std::vector<int> parts;
    for (int x : labels_) {
        if (x > static_cast<int>(parts.size())) parts.resize(x, 0);
        ++parts[x - 1];
    }
    return WeakComposition(std::move(parts));
}

namespace {

// Labels per cell with 0 for unfilled, used by both the checks and the search.
struct Filling {
    const std::vector<Cell>* cells;
    std::vector<int> labels;

    CellBalanceStats stats(std::size_t k) const {
        CellBalanceStats s;
        Cell x = (*cells)[k];
        int v = labels[k];
        for (std::size_t m = 0; m < cells->size(); ++m) {
            int u = labels[m];
            if (m == k || u == 0) continue;
            Cell y = (*cells)[m];
            if (y.row == x.row && y.col > x.col) {
                s.arm_greater += u > v;
                s.arm_weakly_greater += u >= v;
            } else if (y.col == x.col && y.row > x.row) {
                s.leg_less += u < v;
                s.leg_weakly_less += u <= v;
            }
        }
        return s;
    }

    bool column_distinct(std::size_t k) const {
        Cell x = (*cells)[k];
        for (std::size_t m = 0; m < cells->size(); ++m)
            if (m != k && labels[m] != 0 && (*cells)[m].col == x.col && labels[m] == labels[k]) return false;
        return true;
    }
};

bool balanced_at(const Filling& f, std::size_t k) {
    auto s = f.stats(k);
    return s.arm_greater == s.leg_less;
}

bool semi_balanced_at(const Filling& f, std::size_t k) {
    auto s = f.stats(k);
    return f.labels[k] <= (*f.cells)[k].row && f.column_distinct(k) && s.arm_weakly_greater >= s.leg_less &&
           s.leg_weakly_less >= s.arm_greater;
}

std::vector<Cell> cell_vector(const Diagram& d) { return {d.cells().begin(), d.cells().end()}; }

// Rows top to bottom, each right to left, so arms and legs are filled first.
std::vector<std::size_t> fill_order(const std::vector<Cell>& cells) {
    std::vector<std::size_t> order(cells.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cells[a].row != cells[b].row) return cells[a].row > cells[b].row;
        return cells[a].col > cells[b].col;
    });
    return order;
}

}  // namespace

CellBalanceStats cell_stats(const BalancedTableau& t, Cell c) {
    auto cells = cell_vector(t.shape());
    Filling f{&cells, {t.labels().begin(), t.labels().end()}};
    auto it = std::find(cells.begin(), cells.end(), c);
    if (it == cells.end()) throw std::out_of_range("cell outside the Rothe diagram");
    return f.stats(static_cast<std::size_t>(it - cells.begin()));
}

namespace {

bool is_standard(const BalancedTableau& t) {
    auto cells = cell_vector(t.shape());
    std::vector<int> sorted(t.labels().begin(), t.labels().end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k) + 1) return false;
    Filling f{&cells, {t.labels().begin(), t.labels().end()}};
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (!balanced_at(f, k)) return false;
    return true;
}

bool is_semi_standard(const BalancedTableau& t) {
    auto cells = cell_vector(t.shape());
    Filling f{&cells, {t.labels().begin(), t.labels().end()}};
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (f.labels[k] < 1 || !semi_balanced_at(f, k)) return false;
    }
    return true;
}

void search(Filling& f, const std::vector<std::size_t>& order, std::size_t depth, BalancedKind kind,
            std::vector<bool>& used, const Permutation& w, std::vector<BalancedTableau>& out) {
    if (depth == order.size()) {
        out.emplace_back(w, f.labels);
        return;
    }
    std::size_t k = order[depth];
    if (kind == BalancedKind::SBT) {
        for (std::size_t v = 1; v < used.size(); ++v) {
            if (used[v]) continue;
            f.labels[k] = static_cast<int>(v);
            if (balanced_at(f, k)) {
                used[v] = true;
                search(f, order, depth + 1, kind, used, w, out);
                used[v] = false;
            }
        }
    } else {
        for (int v = 1; v <= (*f.cells)[k].row; ++v) {
            f.labels[k] = v;
            if (semi_balanced_at(f, k)) search(f, order, depth + 1, kind, used, w, out);
        }
    }
    f.labels[k] = 0;
}

}  // namespace

std::vector<BalancedTableau> enumerate_balanced(const Permutation& w, BalancedKind kind) {
    auto shape = rothe_diagram(w);
    check_cells(shape.size(), "balanced tableaux");
    std::vector<BalancedTableau> out;
    if (kind == BalancedKind::QBT) {
        for (const auto& d : enumerate_diagrams(w, DiagramKind::QRD))
            if (!diagram_weight(d).is_virtual()) out.push_back(ascend(d, AscendLevel::RD_to_SSBT));
    } else {
        auto cells = cell_vector(shape);
        Filling f{&cells, std::vector<int>(cells.size(), 0)};
        std::vector<bool> used(cells.size() + 1, false);
        search(f, fill_order(cells), 0, kind, used, w, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BalanceFlags classify_balanced(const BalancedTableau& t) {
    BalanceFlags flags;
    flags.standard = is_standard(t);
    flags.semi_standard = is_semi_standard(t);
    if (flags.standard) {
        int n = static_cast<int>(t.labels().size());
        flags.super_yamanouchi = true;
        for (int k = 0; k < n; ++k)
            if (t.labels()[k] != n - k) flags.super_yamanouchi = false;
    }
    if (flags.semi_standard) {
        auto qbt = enumerate_balanced(t.permutation(), BalancedKind::QBT);
        flags.quasi_yamanouchi = std::binary_search(qbt.begin(), qbt.end(), t);
    }
    return flags;
}

namespace {

std::vector<Cell> where_labels(const BalancedTableau& t) {
    std::vector<Cell> where(t.labels().size() + 1);
    for (std::size_t k = 0; k < t.labels().size(); ++k) where[t.labels()[k]] = t.shape().cells()[k];
    return where;
}

BalancedTableau exchange(const BalancedTableau& t, int x, int y) {
    std::vector<int> labels(t.labels().begin(), t.labels().end());
    for (int& v : labels) {
        if (v == x) v = y;
        else if (v == y) v = x;
    }
    return BalancedTableau(t.permutation(), std::move(labels));
}

}  // namespace

BalancedTableau sbt_move(const BalancedTableau& t, MoveKind kind, int i) {
    int n = static_cast<int>(t.labels().size());
    auto where = where_labels(t);
    if (kind == MoveKind::swap) {
        if (i < 1 || i >= n) return t;
        Cell a = where[i], b = where[i + 1];
        if (a.row == b.row || a.col == b.col) return t;
        return exchange(t, i, i + 1);
    }
    if (i <= 1 || i >= n) return t;
    Cell mid = where[i], lo = where[i - 1], hi = where[i + 1];
    auto above = [&](Cell c) { return c.col == mid.col && c.row > mid.row; };
    auto right = [&](Cell c) { return c.row == mid.row && c.col > mid.col; };
    if ((above(lo) && right(hi)) || (above(hi) && right(lo))) return exchange(t, i - 1, i + 1);
    return t;
}

int sbt_inversions(const BalancedTableau& t) {
    auto where = where_labels(t);
    int n = static_cast<int>(t.labels().size());
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (where[i].row > where[j].row && where[i].col != where[j].col) ++count;
    return count;
}

namespace {

// Labels grouped by row, top row first, each row in reading order.
std::vector<std::vector<int>> label_rows(const BalancedTableau& t) {
    std::vector<std::vector<int>> rows;
    int current = 0;
    for (std::size_t k = 0; k < t.labels().size(); ++k) {
        int row = t.shape().cells()[k].row;
        if (rows.empty() || row != current) rows.emplace_back();
        current = row;
        rows.back().push_back(t.labels()[k]);
    }
    return rows;
}

}  // namespace

Permutation sbt_permutation(const BalancedTableau& t) {
    std::vector<int> reading;
    for (auto row : label_rows(t)) {
        std::sort(row.rbegin(), row.rend());
        reading.insert(reading.end(), row.begin(), row.end());
    }
    std::reverse(reading.begin(), reading.end());
    return Permutation(std::move(reading));
}

int sbt_inversions_by_rows(const BalancedTableau& t) {
    int coinversions = 0;
    for (const auto& row : label_rows(t))
        for (std::size_t a = 0; a < row.size(); ++a)
            for (std::size_t b = a + 1; b < row.size(); ++b) coinversions += row[a] < row[b];
    return inversions(sbt_permutation(t)) - coinversions;
}

namespace {

struct Tagged {
    int letter;
    int tag;
};

int tagged_inversions(const std::vector<Tagged>& word) {
    std::vector<int> letters;
    for (const auto& x : word) letters.push_back(x.letter);
    return word_statistics(ReducedWord(std::move(letters))).inversions;
}

// Applies the move at position i (from the right) carrying tags along.
std::vector<Tagged> tagged_move(std::vector<Tagged> word, MoveKind kind, int i) {
    std::size_t k = word.size();
    auto idx = [k](int position) { return k - static_cast<std::size_t>(position); };
    if (kind == MoveKind::swap) {
        std::swap(word[idx(i)], word[idx(i + 1)]);
        return word;
    }
    // The middle cell keeps its tag; the outer two exchange theirs.
    int outer = word[idx(i)].letter;
    int middle = word[idx(i - 1)].letter;
    std::swap(word[idx(i + 1)].tag, word[idx(i - 1)].tag);
    word[idx(i + 1)].letter = outer;
    word[idx(i)].letter = middle;
    word[idx(i - 1)].letter = outer;
    return word;
}

}  // namespace

BalancedTableau ascend(const LabeledDiagram& d, AscendLevel level, const MoveChooser& choose) {
    auto flags = classify(d);
    if (!flags.reduced) throw std::invalid_argument("diagram is not reduced");
    if (level == AscendLevel::QRD_to_SBT && !flags.quasi_yamanouchi)
        throw std::invalid_argument("diagram is not quasi-Yamanouchi");
    if (level == AscendLevel::RD_to_SSBT && flags.is_virtual) throw std::invalid_argument("diagram is virtual");

    auto cells = d.cells();
    int k = static_cast<int>(cells.size());
    std::vector<Tagged> word;
    for (int p = 0; p < k; ++p)
        word.push_back({cells[p].label, level == AscendLevel::QRD_to_SBT ? k - p : cells[p].row});

    ReducedWord current(reading_word(d));
    const Permutation w = current.permutation();
    int inv = tagged_inversions(word);
    while (inv > 0) {
        struct Candidate {
            MoveKind kind;
            int i;
        };
        std::vector<Candidate> candidates;
        for (int i = 1; i <= k; ++i) {
            for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                if (!move_applies(current, kind, i)) continue;
                if (word_statistics(word_move(current, kind, i)).inversions < inv) candidates.push_back({kind, i});
            }
            if (!choose && !candidates.empty()) break;
        }
        if (candidates.empty()) throw std::logic_error("no inversion-reducing move from " + current.to_string());
        auto pick = candidates[choose ? choose(candidates.size()) % candidates.size() : 0];
        word = tagged_move(std::move(word), pick.kind, pick.i);
        current = word_move(current, pick.kind, pick.i);
        --inv;
    }

    // Run with first letter r fills Rothe row r left to right.
    auto shape = rothe_diagram(w);
    std::vector<int> labels(shape.size(), 0);
    auto runs = run_decomposition(current);
    std::size_t offset = 0;
    for (const auto& run : runs.runs) {
        int row = run.front();
        std::vector<std::size_t> slots;
        for (std::size_t m = 0; m < shape.size(); ++m)
            if (shape.cells()[m].row == row) slots.push_back(m);
        if (slots.size() != run.size()) throw std::logic_error("run does not match Rothe row " + std::to_string(row));
        for (std::size_t m = 0; m < run.size(); ++m) labels[slots[m]] = word[offset + m].tag;
        offset += run.size();
    }
    return BalancedTableau(w, std::move(labels));
}

}  // namespace schubert
