#include "schubert/insertion.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace schubert {

std::vector<int> YoungTableau::shape() const {
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
    return out;
}

int YoungTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

namespace {

std::string join_row(const std::vector<int>& row) {
    std::string out;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) out += ' ';
        out += std::to_string(row[k]);
    }
    return out;
}

}  // namespace

std::string YoungTableau::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) out += " / ";
        out += join_row(rows[r]);
    }
    return out;
}

WeakComposition KeyTableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return WeakComposition(std::move(parts));
}

int KeyTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

std::vector<int> KeyTableau::reading_word() const {
    std::vector<int> out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
}

std::string KeyTableau::to_string() const {
    std::string out;
    for (std::size_t r = rows.size(); r-- > 0;) {
        if (rows[r].empty()) continue;
        if (!out.empty()) out += " / ";
        out += "r" + std::to_string(r + 1) + ": " + join_row(rows[r]);
    }
    return out;
}

void KeyTableau::trim() {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

std::pair<YoungTableau, YoungTableau> eg_insert(const ReducedWord& word) {
    YoungTableau p, q;
    int step = 0;
    for (int letter : word.letters()) {
        ++step;
        int x = letter;
        for (std::size_t r = 0;; ++r) {
            if (r == p.rows.size()) {
                p.rows.push_back({x});
                q.rows.push_back({step});
                break;
            }
            auto& row = p.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q.rows[r].push_back(step);
                break;
            }
            int bumped = *it;
            bool keep = bumped == x + 1 && std::binary_search(row.begin(), row.end(), x);
            if (!keep) *it = x;
            x = bumped;
        }
    }
    return {std::move(p), std::move(q)};
}

KeyTableau lift(const YoungTableau& p) {
    KeyTableau k;
    auto ensure = [&](int row) {
        if (static_cast<int>(k.rows.size()) < row) k.rows.resize(row);
    };
    for (const auto& r : p.rows) {
        int x = r.front();
        ensure(x);
        if (!k.rows[x - 1].empty()) throw std::logic_error("first column repeats an entry");
        k.rows[x - 1].push_back(x);
    }
    std::size_t width = p.rows.empty() ? 0 : p.rows.front().size();
    for (std::size_t c = 1; c < width; ++c) {
        int previous = INT_MAX;
        for (std::size_t r = p.rows.size(); r-- > 0;) {
            if (p.rows[r].size() <= c) continue;
            int x = p.rows[r][c];
            int target = 0;
            for (int row = std::min(previous - 1, static_cast<int>(k.rows.size())); row >= 1; --row) {
                const auto& candidate = k.rows[row - 1];
                if (candidate.size() == c && candidate[c - 1] < x) {
                    target = row;
                    break;
                }
            }
            if (target == 0) throw std::logic_error("entry " + std::to_string(x) + " cannot be lifted");
            k.rows[target - 1].push_back(x);
            previous = target;
        }
    }
    return k;
}

YoungTableau drop(const KeyTableau& k) {
    YoungTableau p;
    for (const auto& row : k.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            // Count entries of column c already dropped to find the landing row.
            std::size_t landing = 0;
            while (landing < p.rows.size() && p.rows[landing].size() > c) ++landing;
            if (landing == p.rows.size()) p.rows.emplace_back();
            if (p.rows[landing].size() != c) throw std::invalid_argument("key tableau is not left-justified");
            p.rows[landing].push_back(row[c]);
        }
    }
    return p;
}

std::pair<KeyTableau, KeyTableau> weak_insert(const ReducedWord& word) {
    auto [p, q] = eg_insert(word);
    KeyTableau weak_p = lift(p);
    KeyTableau weak_q = syt_to_skt(q, weak_p.shape());
    return {std::move(weak_p), std::move(weak_q)};
}

namespace {

struct SktSearch {
    std::vector<int> lengths;  // lengths[r] = a_{r+1}
    KeyTableau current;
    std::vector<KeyTableau> out;

    bool cell_exists(std::size_t r, std::size_t c) const { return c < static_cast<std::size_t>(lengths[r]); }

    // Placing value v at (r, c) after all larger values: every larger entry
    // below in the column needs its right neighbour already placed.
    bool admissible(std::size_t r, std::size_t c) const {
        for (std::size_t s = 0; s < r; ++s) {
            if (current.rows[s].size() <= c) continue;
            if (!cell_exists(s, c + 1) || current.rows[s].size() <= c + 1) return false;
        }
        return true;
    }

    void run(int value) {
        if (value == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t r = 0; r < lengths.size(); ++r) {
            std::size_t c = current.rows[r].size();
            if (!cell_exists(r, c) || !admissible(r, c)) continue;
            current.rows[r].push_back(value);
            run(value - 1);
            current.rows[r].pop_back();
        }
    }
};

}  // namespace

std::vector<KeyTableau> standard_key_tableaux(const WeakComposition& a) {
    if (a.is_virtual()) throw std::invalid_argument("virtual shape");
    SktSearch search;
    search.lengths.assign(a.parts().begin(), a.parts().end());
    search.current.rows.resize(search.lengths.size());
    search.run(a.total());
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
}

bool is_standard_key_tableau(const KeyTableau& t) {
    int n = t.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > n || seen[row[c]]) return false;
            seen[row[c]] = true;
            if (c > 0 && row[c - 1] <= row[c]) return false;
        }
    }
    for (std::size_t lower = 0; lower < t.rows.size(); ++lower) {
        for (std::size_t c = 0; c < t.rows[lower].size(); ++c) {
            int k = t.rows[lower][c];
            for (std::size_t upper = lower + 1; upper < t.rows.size(); ++upper) {
                if (t.rows[upper].size() <= c) continue;
                int i = t.rows[upper][c];
                if (i >= k) continue;
                if (t.rows[lower].size() <= c + 1 || t.rows[lower][c + 1] <= i) return false;
            }
        }
    }
    return true;
}

namespace {

struct Position {
    int row;
    int col;
};

std::vector<Position> positions(const KeyTableau& t) {
    std::vector<Position> where(t.size() + 1, {0, 0});
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            where[t.rows[r][c]] = {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    return where;
}

}  // namespace

WeakComposition skt_descent_composition(const KeyTableau& t) {
    int n = t.size();
    if (n == 0) return WeakComposition{};
    auto where = positions(t);
    std::vector<int> sizes;
    std::vector<int> anchors;
    for (int v = n; v >= 1; --v) {
        if (v == n || where[v + 1].col >= where[v].col) {
            int top = where[v].row;
            anchors.push_back(anchors.empty() ? top : std::min(top, anchors.back() - 1));
            sizes.push_back(0);
        }
        ++sizes.back();
    }
    if (anchors.back() <= 0) return WeakComposition::make_virtual();
    std::vector<int> parts(anchors.front(), 0);
    for (std::size_t k = 0; k < anchors.size(); ++k) parts[anchors[k] - 1] = sizes[k];
    return WeakComposition(std::move(parts));
}

YoungTableau skt_to_syt(const KeyTableau& t) {
    YoungTableau s = drop(t);
    int n = t.size();
    std::size_t width = s.rows.empty() ? 0 : s.rows.front().size();
    for (std::size_t c = 0; c < width; ++c) {
        std::vector<int> column;
        for (const auto& row : s.rows)
            if (row.size() > c) column.push_back(row[c]);
        std::sort(column.rbegin(), column.rend());
        for (std::size_t r = 0; r < column.size(); ++r) s.rows[r][c] = n + 1 - column[r];
    }
    return s;
}

KeyTableau syt_to_skt(const YoungTableau& s, const WeakComposition& a) {
    static std::mutex mutex;
    static std::map<WeakComposition, std::map<YoungTableau, KeyTableau>> cache;
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(a);
    if (inserted)
        for (auto& t : standard_key_tableaux(a)) it->second.emplace(skt_to_syt(t), std::move(t));
    auto found = it->second.find(s);
    if (found == it->second.end())
        throw std::invalid_argument("no standard key tableau of shape " + a.to_string() + " matches");
    return found->second;
}

namespace {

// Cells in column reading order: columns left to right, each bottom to top.
std::vector<int> column_reading_order(const KeyTableau& t) {
    std::vector<int> out;
    std::size_t width = 0;
    for (const auto& row : t.rows) width = std::max(width, row.size());
    for (std::size_t c = 0; c < width; ++c)
        for (const auto& row : t.rows)
            if (row.size() > c) out.push_back(row[c]);
    return out;
}

KeyTableau relabel(const KeyTableau& t, const std::map<int, int>& image) {
    KeyTableau out = t;
    for (auto& row : out.rows)
        for (int& x : row)
            if (auto it = image.find(x); it != image.end()) x = it->second;
    return out;
}

}  // namespace

KeyTableau weak_dual_move(const KeyTableau& t, int i) {
    int n = t.size();
    if (i <= 1 || i >= n) return t;
    auto order = column_reading_order(t);
    std::vector<int> triple;
    for (int x : order)
        if (x >= i - 1 && x <= i + 1) triple.push_back(x);
    auto where = positions(t);
    int b = triple[0], c = triple[1], d = triple[2];
    if (where[b].row == where[d].row && where[c].row != where[b].row) {
        // Rotate the three values; keep the rotation that leaves i beside i-1 or i+1.
        for (int step : {1, 2}) {
            std::map<int, int> image;
            for (int x = i - 1; x <= i + 1; ++x) image[x] = i - 1 + (x - (i - 1) + step) % 3;
            KeyTableau moved = relabel(t, image);
            if (!is_standard_key_tableau(moved)) continue;
            auto at = positions(moved);
            if (at[i].row == at[i - 1].row || at[i].row == at[i + 1].row) return moved;
        }
        return t;
    }
    if (c == i + 1) return relabel(t, {{i - 1, i}, {i, i - 1}});
    if (c == i - 1) return relabel(t, {{i, i + 1}, {i + 1, i}});
    return t;
}

}  // namespace schubert
