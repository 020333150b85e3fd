#include "schubert/redword.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "schubert/guard.hpp"

namespace schubert {

namespace {

std::vector<int> parse_letters(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        out.push_back(std::stoi(token));
        token.clear();
    };
    bool has_comma = text.find(',') != std::string_view::npos;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            token += c;
            if (!has_comma) flush();
        } else if (c == ',' || c == ' ' || c == '|') {
            flush();
        } else if (c != '(' && c != ')') {
            throw std::invalid_argument("bad reduced word: " + std::string(text));
        }
    }
    flush();
    return out;
}

}  // namespace

ReducedWord::ReducedWord(std::vector<int> letters) : letters_(std::move(letters)) {
    int top = 0;
    for (int a : letters_) {
        if (a < 1) throw std::invalid_argument("letters must be positive");
        top = std::max(top, a);
    }
    // Build w = s_{a_k} ... s_{a_1} by right multiplication, last letter first.
    std::vector<int> u(top + 1);
    std::iota(u.begin(), u.end(), 1);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        int a = *it;
        if (u[a - 1] > u[a]) throw std::invalid_argument("word is not reduced");
        std::swap(u[a - 1], u[a]);
    }
    permutation_ = Permutation(std::move(u)).trimmed();
}

ReducedWord ReducedWord::parse(std::string_view text) { return ReducedWord(parse_letters(text)); }

std::string ReducedWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

namespace {

void collect_words(std::vector<int>& w, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    bool sorted = true;
    for (std::size_t a = 1; a < w.size(); ++a) {
        if (w[a - 1] > w[a]) {
            sorted = false;
            std::swap(w[a - 1], w[a]);
            prefix.push_back(static_cast<int>(a));
            collect_words(w, prefix, out);
            prefix.pop_back();
            std::swap(w[a - 1], w[a]);
        }
    }
    if (sorted) out.push_back(prefix);
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& w) {
    check_cells(static_cast<std::size_t>(inversions(w)), "reduced words");
    std::vector<int> values(w.values().begin(), w.values().end());
    std::vector<int> prefix;
    std::vector<std::vector<int>> raw;
    collect_words(values, prefix, raw);
    std::vector<ReducedWord> out;
    out.reserve(raw.size());
    for (auto& letters : raw) out.emplace_back(std::move(letters));
    return out;
}

std::string RunDecomposition::to_string() const {
    std::string out = "(";
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (r > 0) out += '|';
        for (int a : runs[r]) out += std::to_string(a);
    }
    return out + ")";
}

RunDecomposition run_decomposition(const ReducedWord& word) {
    RunDecomposition out;
    auto letters = word.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k == 0 || letters[k - 1] >= letters[k]) out.runs.emplace_back();
        out.runs.back().push_back(letters[k]);
    }
    for (std::size_t r = 0; r < out.runs.size(); ++r) {
        int first = out.runs[r].front();
        out.anchors.push_back(r == 0 ? first : std::min(first, out.anchors.back() - 1));
    }
    return out;
}

WeakComposition weak_descent_composition(const ReducedWord& word) {
    auto runs = run_decomposition(word);
    if (runs.runs.empty()) return WeakComposition{};
    if (runs.anchors.back() <= 0) return WeakComposition::make_virtual();
    std::vector<int> parts(runs.anchors.front(), 0);
    for (std::size_t r = 0; r < runs.runs.size(); ++r)
        parts[runs.anchors[r] - 1] = static_cast<int>(runs.runs[r].size());
    return WeakComposition(std::move(parts));
}

namespace {

// Fills alpha from position j = k down to 1; alpha_j <= bound.
void compatible_dfs(const ReducedWord& word, int j, int bound, StrongComposition& alpha,
                    std::vector<StrongComposition>& out) {
    if (j == 0) {
        out.push_back(alpha);
        return;
    }
    int upper = std::min(bound, word.at(j));
    for (int value = upper; value >= 1; --value) {
        alpha[j - 1] = value;
        int next_bound = value;
        if (j > 1 && word.at(j - 1) < word.at(j)) next_bound = value - 1;
        compatible_dfs(word, j - 1, next_bound, alpha, out);
    }
}

}  // namespace

std::vector<StrongComposition> compatible_sequences(const ReducedWord& word) {
    std::vector<StrongComposition> out;
    StrongComposition alpha(word.length(), 0);
    compatible_dfs(word, word.length(), word.length() == 0 ? 0 : word.at(word.length()), alpha, out);
    std::sort(out.begin(), out.end());
    return out;
}

WeakComposition sequence_weight(const StrongComposition& alpha) {
    std::vector<int> parts;
    for (int a : alpha) {
        if (a > static_cast<int>(parts.size())) parts.resize(a, 0);
        ++parts[a - 1];
    }
    return WeakComposition(std::move(parts));
}

ReducedWord super_yamanouchi_word(const Permutation& w) {
    std::vector<int> u(w.values().begin(), w.values().end());
    std::vector<int> letters;
    int n = static_cast<int>(u.size());
    while (true) {
        int i = -1;
        for (int p = n - 2; p >= 0; --p)
            if (u[p] > u[p + 1]) {
                i = p;
                break;
            }
        if (i < 0) break;
        // Carry u_i rightward past every smaller neighbour.
        int p = i;
        while (p + 1 < n && u[p] > u[p + 1]) {
            std::swap(u[p], u[p + 1]);
            letters.push_back(p + 1);
            ++p;
        }
    }
    return ReducedWord(std::move(letters));
}

bool is_super_yamanouchi(const ReducedWord& word) {
    auto runs = run_decomposition(word);
    for (std::size_t r = 0; r < runs.runs.size(); ++r) {
        const auto& run = runs.runs[r];
        for (std::size_t k = 1; k < run.size(); ++k)
            if (run[k] != run[k - 1] + 1) return false;
        if (r > 0 && runs.runs[r - 1].front() <= run.front()) return false;
    }
    return true;
}

bool move_applies(const ReducedWord& word, MoveKind kind, int i) {
    int k = word.length();
    if (kind == MoveKind::swap) {
        if (i < 1 || i + 1 > k) return false;
        return std::abs(word.at(i) - word.at(i + 1)) > 1;
    }
    if (i < 2 || i + 1 > k) return false;
    int low = word.at(i - 1), mid = word.at(i), high = word.at(i + 1);
    return low == high && std::abs(mid - low) == 1;
}

ReducedWord word_move(const ReducedWord& word, MoveKind kind, int i) {
    if (!move_applies(word, kind, i)) return word;
    std::vector<int> letters(word.letters().begin(), word.letters().end());
    int k = word.length();
    auto idx = [k](int position) { return static_cast<std::size_t>(k - position); };
    if (kind == MoveKind::swap) {
        std::swap(letters[idx(i)], letters[idx(i + 1)]);
    } else {
        int middle = letters[idx(i)];
        int side = letters[idx(i - 1)];
        letters[idx(i + 1)] = middle;
        letters[idx(i)] = side;
        letters[idx(i - 1)] = middle;
    }
    return ReducedWord(std::move(letters));
}

WordStatistics word_statistics(const ReducedWord& reference, const ReducedWord& target) {
    if (reference.permutation() != target.permutation())
        throw std::invalid_argument("words belong to different permutations");
    int k = reference.length();
    std::vector<int> v(k, 0);
    std::vector<bool> paired(k + 1, false);
    // Both scans run from the left end of the printed words.
    for (int i = k; i >= 1; --i) {
        int value = reference.at(i);
        for (int j = k; j >= 1; --j) {
            if (paired[j]) continue;
            if (target.at(j) == value) {
                paired[j] = true;
                v[i - 1] = j;
                break;
            }
            if (target.at(j) == value - 1) --value;
        }
        if (v[i - 1] == 0) throw std::logic_error("pairing failed for " + target.to_string());
    }
    long offset = 0;
    for (int j = 1; j <= k; ++j) offset += reference.at(j) - target.at(j);
    Permutation pairing(std::move(v));
    return {pairing, inversions(pairing) - static_cast<int>(offset)};
}

WordStatistics word_statistics(const ReducedWord& word) {
    return word_statistics(super_yamanouchi_word(word.permutation()), word);
}

std::optional<int> pairing_metric(const ReducedWord& from, const ReducedWord& to) {
    try {
        auto stats = word_statistics(from, to);
        long offset = 0;
        for (int j = 1; j <= from.length(); ++j) offset += from.at(j) - to.at(j);
        return inversions(stats.pairing) - static_cast<int>(std::labs(offset));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

int word_metric(const ReducedWord& a, const ReducedWord& b) {
    if (a.permutation() != b.permutation()) throw std::invalid_argument("words belong to different permutations");
    std::map<ReducedWord, int> distance{{a, 0}};
    std::deque<ReducedWord> queue{a};
    while (!queue.empty()) {
        auto current = std::move(queue.front());
        queue.pop_front();
        int d = distance.at(current);
        if (current == b) return d;
        for (int i = 1; i <= current.length(); ++i)
            for (auto kind : {MoveKind::swap, MoveKind::braid}) {
                auto moved = word_move(current, kind, i);
                if (distance.emplace(moved, d + 1).second) queue.push_back(std::move(moved));
            }
        check_closure(distance.size(), "word metric search");
    }
    throw std::logic_error("words are not connected by relations");
}

ReducedWord coxeter_knuth_move(const ReducedWord& word, int i) {
    if (i <= 1 || i >= word.length()) return word;
    int low = word.at(i - 1), mid = word.at(i), high = word.at(i + 1);
    if (low == high && std::abs(mid - low) == 1) return word_move(word, MoveKind::braid, i);
    if ((low > high && high > mid) || (low < high && high < mid)) return word_move(word, MoveKind::swap, i - 1);
    if ((high > low && low > mid) || (high < low && low < mid)) return word_move(word, MoveKind::swap, i);
    return word;
}

std::vector<ReducedWord> coxeter_knuth_class(const ReducedWord& word) {
    std::set<ReducedWord> seen{word};
    std::vector<ReducedWord> frontier{word};
    while (!frontier.empty()) {
        std::vector<ReducedWord> next;
        for (const auto& current : frontier)
            for (int i = 2; i < current.length(); ++i) {
                auto moved = coxeter_knuth_move(current, i);
                if (seen.insert(moved).second) next.push_back(moved);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace schubert
