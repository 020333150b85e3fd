#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/core.hpp"

namespace schubert {

using Coefficient = std::int64_t;

// Overflow-checked integer arithmetic; throws std::overflow_error.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

// Sparse polynomial in x1, x2, ... with integer coefficients. Exponent
// vectors are stored without trailing zeros and zero terms are never kept.
class Polynomial {
public:
    using Exponent = std::vector<int>;
    using Term = std::pair<WeakComposition, Coefficient>;

    Polynomial() = default;
    static Polynomial constant(Coefficient c);
    static Polynomial variable(int i);
    static Polynomial monomial(const WeakComposition& exponent, Coefficient c = 1);

    void add_term(const WeakComposition& exponent, Coefficient c);
    void add_term(Exponent exponent, Coefficient c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Coefficient coefficient(const WeakComposition& exponent) const;
    // Sum of all coefficients, i.e. the value at x = (1,1,...).
    Coefficient coefficient_sum() const;
    // Largest variable index appearing in some term.
    int ambient() const;
    bool has_negative_coefficient() const;

    // Terms in graded reverse-lexicographic order, largest first.
    std::vector<Term> terms() const;
    // The image under x_i <-> x_{i+1}.
    Polynomial swapped(int i) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Text form such as "3*x1^2*x2 - x3 + 1".
    std::string to_string() const;

    friend Polynomial divided_difference(const Polynomial& p, int i);

private:
    std::map<Exponent, Coefficient> terms_;
};

// Graded reverse-lexicographic comparison: true when a comes before b.
bool grevlex_greater(std::span<const int> a, std::span<const int> b);

// (p - s_i p) / (x_i - x_{i+1}) computed by long division; throws
// std::logic_error when the division leaves a remainder.
Polynomial divided_difference(const Polynomial& p, int i);

// Exponents b with dominates_refines(b, a), in lexicographic order.
std::vector<WeakComposition> slide_support(const WeakComposition& a);
// Zero for the virtual composition.
Polynomial fundamental_slide(const WeakComposition& a);

// x1^{n-1} x2^{n-2} ... x_{n-1}
Polynomial staircase_monomial(int n);

}  // namespace schubert
