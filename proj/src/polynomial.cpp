#include "schubert/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in addition");
    return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow in multiplication");
    return out;
}

namespace {

void trim(Polynomial::Exponent& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

int exponent_at(const Polynomial::Exponent& e, int i) {
    return i >= 1 && i <= static_cast<int>(e.size()) ? e[i - 1] : 0;
}

}  // namespace

Polynomial Polynomial::constant(Coefficient c) {
    Polynomial p;
    p.add_term(Exponent{}, c);
    return p;
}

Polynomial Polynomial::variable(int i) {
    if (i < 1) throw std::invalid_argument("variable index must be positive");
    Exponent e(i, 0);
    e[i - 1] = 1;
    Polynomial p;
    p.add_term(std::move(e), 1);
    return p;
}

Polynomial Polynomial::monomial(const WeakComposition& exponent, Coefficient c) {
    Polynomial p;
    p.add_term(exponent, c);
    return p;
}

void Polynomial::add_term(const WeakComposition& exponent, Coefficient c) {
    if (exponent.is_virtual()) throw std::invalid_argument("virtual exponent");
    add_term(Exponent(exponent.parts().begin(), exponent.parts().end()), c);
}

void Polynomial::add_term(Exponent exponent, Coefficient c) {
    if (c == 0) return;
    trim(exponent);
    auto [it, inserted] = terms_.try_emplace(std::move(exponent), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Coefficient Polynomial::coefficient(const WeakComposition& exponent) const {
    if (exponent.is_virtual()) return 0;
    Exponent e(exponent.parts().begin(), exponent.parts().end());
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

Coefficient Polynomial::coefficient_sum() const {
    Coefficient total = 0;
    for (const auto& [e, c] : terms_) total = checked_add(total, c);
    return total;
}

int Polynomial::ambient() const {
    int n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
    return n;
}

bool Polynomial::has_negative_coefficient() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second < 0; });
}

bool grevlex_greater(std::span<const int> a, std::span<const int> b) {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = n; k-- > 0;) {
        int ea = k < a.size() ? a[k] : 0;
        int eb = k < b.size() ? b[k] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::vector<Polynomial::Term> Polynomial::terms() const {
    std::vector<const std::pair<const Exponent, Coefficient>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* x, const auto* y) { return grevlex_greater(x->first, y->first); });
    std::vector<Term> out;
    out.reserve(order.size());
    for (const auto* t : order) out.emplace_back(WeakComposition(t->first), t->second);
    return out;
}

Polynomial Polynomial::swapped(int i) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        if (static_cast<int>(f.size()) < i + 1) f.resize(i + 1, 0);
        std::swap(f[i - 1], f[i]);
        out.add_term(std::move(f), c);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [e1, c1] : lhs.terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Polynomial::Exponent e(std::max(e1.size(), e2.size()), 0);
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = (k < e1.size() ? e1[k] : 0) + (k < e2.size() ? e2[k] : 0);
            out.add_term(std::move(e), checked_mul(c1, c2));
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, c] : terms()) {
        Coefficient mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 1; i <= exp.length(); ++i) {
            int d = exp.part(i);
            if (d == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (d > 1) mono += "^" + std::to_string(d);
        }
        if (mono.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

Polynomial divided_difference(const Polynomial& p, int i) {
    if (i < 1) throw std::invalid_argument("divided difference index must be positive");
    Polynomial rest = p - p.swapped(i);
    Polynomial quotient;
    // Long division by x_i - x_{i+1}, always eliminating a term of largest x_i degree.
    while (!rest.is_zero()) {
        Polynomial::Exponent lead;
        Coefficient lead_c = 0;
        int best = -1;
        for (const auto& [e, c] : rest.terms_) {
            int d = exponent_at(e, i);
            if (d > best) {
                best = d;
                lead = e;
                lead_c = c;
            }
        }
        if (best <= 0) throw std::logic_error("inexact divided difference");
        Polynomial::Exponent q = lead;
        q[i - 1] -= 1;
        Polynomial::Exponent shifted = q;
        if (static_cast<int>(shifted.size()) < i + 1) shifted.resize(i + 1, 0);
        shifted[i] += 1;
        quotient.add_term(q, lead_c);
        rest.add_term(lead, checked_mul(lead_c, -1));
        rest.add_term(shifted, lead_c);
    }
    return quotient;
}

namespace {

void slide_dfs(const std::vector<int>& target_prefix, const StrongComposition& blocks, std::size_t block,
               int remaining, int position, int prefix, std::vector<int>& current,
               std::vector<WeakComposition>& out) {
    int length = static_cast<int>(target_prefix.size());
    if (position == length) {
        if (block == blocks.size()) out.emplace_back(current);
        return;
    }
    // Each part is either zero or a piece of the current flat block.
    int max_part = block < blocks.size() ? remaining : 0;
    for (int part = 0; part <= max_part; ++part) {
        int next_prefix = prefix + part;
        if (next_prefix < target_prefix[position]) continue;
        current[position] = part;
        std::size_t next_block = block;
        int next_remaining = remaining - part;
        if (part > 0 && next_remaining == 0) {
            ++next_block;
            next_remaining = next_block < blocks.size() ? blocks[next_block] : 0;
        }
        slide_dfs(target_prefix, blocks, next_block, next_remaining, position + 1, next_prefix, current, out);
    }
    current[position] = 0;
}

}  // namespace

std::vector<WeakComposition> slide_support(const WeakComposition& a) {
    if (a.is_virtual()) return {};
    auto blocks = flatten(a);
    if (blocks.empty()) return {WeakComposition{}};
    std::vector<int> prefix(a.length());
    int running = 0;
    for (int i = 0; i < a.length(); ++i) prefix[i] = running += a.part(i + 1);
    std::vector<int> current(a.length(), 0);
    std::vector<WeakComposition> out;
    slide_dfs(prefix, blocks, 0, blocks[0], 0, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial fundamental_slide(const WeakComposition& a) {
    Polynomial p;
    for (const auto& b : slide_support(a)) p.add_term(b, 1);
    return p;
}

Polynomial staircase_monomial(int n) {
    std::vector<int> e;
    for (int i = 1; i < n; ++i) e.push_back(n - i);
    return Polynomial::monomial(WeakComposition(std::move(e)));
}

}  // namespace schubert
