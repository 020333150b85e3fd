#include "schubert/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schubert {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '['))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto piece = trim(text.substr(start, end - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("not an integer list: " + std::string(text));
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > size() || seen[v])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    if (text.find(',') == std::string_view::npos && text.size() > 1) {
        std::vector<int> v;
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation: " + std::string(text));
            v.push_back(c - '0');
        }
        return Permutation(std::move(v));
    }
    return Permutation(parse_int_list(text));
}

int Permutation::operator()(int position) const {
    if (position < 1) throw std::out_of_range("permutation position");
    return position <= size() ? values_[position - 1] : position;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    int n = std::max(size(), rhs.size());
    std::vector<int> out(n);
    for (int j = 1; j <= n; ++j) out[j - 1] = (*this)(rhs(j));
    return Permutation(std::move(out));
}

Permutation Permutation::times_simple(int i) const {
    if (i < 1) throw std::out_of_range("simple transposition index");
    Permutation out = padded(i + 1);
    std::swap(out.values_[i - 1], out.values_[i]);
    return out;
}

Permutation Permutation::trimmed() const {
    Permutation out = *this;
    while (!out.values_.empty() && out.values_.back() == out.size()) out.values_.pop_back();
    return out;
}

Permutation Permutation::padded(int n) const {
    Permutation out = *this;
    for (int v = size() + 1; v <= n; ++v) out.values_.push_back(v);
    return out;
}

bool Permutation::is_identity() const { return trimmed().values_.empty(); }

std::string Permutation::to_string() const {
    std::string out;
    bool compact = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

bool operator==(const Permutation& a, const Permutation& b) {
    return a.trimmed().values_ == b.trimmed().values_;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    int n = std::max(a.size(), b.size());
    for (int i = 1; i <= n; ++i)
        if (auto c = a(i) <=> b(i); c != 0) return c;
    return std::strong_ordering::equal;
}

int inversions(const Permutation& w) {
    int count = 0;
    auto v = w.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++count;
    return count;
}

std::vector<int> lehmer_code(const Permutation& w) {
    auto v = w.values();
    std::vector<int> code(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) ++code[i];
    return code;
}

Permutation shift(const Permutation& w, int m) {
    if (m < 0) throw std::invalid_argument("negative shift");
    std::vector<int> out(m);
    std::iota(out.begin(), out.end(), 1);
    for (int v : w.values()) out.push_back(v + m);
    return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("negative part in weak composition");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

WeakComposition::WeakComposition(std::initializer_list<int> parts)
    : WeakComposition(std::vector<int>(parts)) {}

WeakComposition WeakComposition::make_virtual() {
    WeakComposition a;
    a.virtual_ = true;
    return a;
}

WeakComposition WeakComposition::parse(std::string_view text) {
    if (text == "virtual") return make_virtual();
    return WeakComposition(parse_int_list(text));
}

int WeakComposition::part(int i) const {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
}

int WeakComposition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> WeakComposition::padded(int n) const {
    std::vector<int> out(parts_);
    if (static_cast<int>(out.size()) < n) out.resize(n, 0);
    return out;
}

std::string WeakComposition::to_string(int min_length) const {
    if (virtual_) return "virtual";
    std::string out = "(";
    auto p = padded(min_length);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p[i]);
    }
    return out + ")";
}

std::strong_ordering operator<=>(const WeakComposition& a, const WeakComposition& b) {
    if (a.virtual_ != b.virtual_) return a.virtual_ <=> b.virtual_;
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i)
        if (auto c = a.part(i) <=> b.part(i); c != 0) return c;
    return std::strong_ordering::equal;
}

WeakComposition shift(const WeakComposition& a, int m) {
    if (a.is_virtual()) return a;
    std::vector<int> out(m, 0);
    out.insert(out.end(), a.parts().begin(), a.parts().end());
    return WeakComposition(std::move(out));
}

StrongComposition flatten(const WeakComposition& a) {
    if (a.is_virtual()) throw std::invalid_argument("cannot flatten the virtual composition");
    StrongComposition out;
    for (int p : a.parts())
        if (p > 0) out.push_back(p);
    return out;
}

bool dominates_refines(const WeakComposition& b, const WeakComposition& a) {
    if (a.is_virtual() || b.is_virtual()) return false;
    if (a.total() != b.total()) return false;
    int n = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (int i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sb < sa) return false;
    }
    // flat(a) must be a sum of consecutive blocks of flat(b)
    auto fa = flatten(a);
    auto fb = flatten(b);
    std::size_t j = 0;
    for (int target : fa) {
        int acc = 0;
        while (acc < target && j < fb.size()) acc += fb[j++];
        if (acc != target) return false;
    }
    return j == fb.size();
}

std::vector<int> sorted_partition(const WeakComposition& a) {
    std::vector<int> out;
    for (int p : a.parts())
        if (p > 0) out.push_back(p);
    std::sort(out.rbegin(), out.rend());
    return out;
}

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw std::invalid_argument("duplicate cell in diagram");
    for (const auto& c : cells_)
        if (c.col < 1) throw std::invalid_argument("column must be positive");
}

bool Diagram::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

void Diagram::insert(Cell c) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it != cells_.end() && *it == c) throw std::invalid_argument("cell already present");
    cells_.insert(it, c);
}

void Diagram::erase(Cell c) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) throw std::invalid_argument("cell not present");
    cells_.erase(it);
}

WeakComposition Diagram::weight() const {
    if (cells_.empty()) return WeakComposition{};
    if (lowest_row() <= 0) return WeakComposition::make_virtual();
    std::vector<int> parts(highest_row(), 0);
    for (const auto& c : cells_) ++parts[c.row - 1];
    return WeakComposition(std::move(parts));
}

int Diagram::lowest_row() const { return cells_.empty() ? 1 : cells_.back().row; }
int Diagram::highest_row() const { return cells_.empty() ? 0 : cells_.front().row; }

Diagram rothe_diagram(const Permutation& w) {
    std::vector<Cell> cells;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) cells.push_back({i, w(j)});
    return Diagram(std::move(cells));
}

Diagram key_diagram(const WeakComposition& a) {
    if (a.is_virtual()) throw std::invalid_argument("key diagram of the virtual composition");
    std::vector<Cell> cells;
    for (int r = 1; r <= a.length(); ++r)
        for (int c = 1; c <= a.part(r); ++c) cells.push_back({r, c});
    return Diagram(std::move(cells));
}

std::size_t DiagramHash::operator()(const Diagram& d) const noexcept {
    std::size_t h = d.size();
    for (const auto& c : d.cells())
        h ^= std::hash<long long>{}((static_cast<long long>(c.row) << 32) ^ c.col) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
    return h;
}

}  // namespace schubert

std::size_t std::hash<schubert::WeakComposition>::operator()(const schubert::WeakComposition& a) const noexcept {
    std::size_t h = a.is_virtual() ? 0x51ed27u : 0u;
    for (int p : a.parts()) h = h * 1000003u ^ static_cast<std::size_t>(p);
    return h;
}
