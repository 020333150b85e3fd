#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "schubert/core.hpp"
#include "schubert/execution.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class Strategy {
    CompatibleSequences,
    SlideWords,
    ReducedDiagrams,
    SSBT,
    KeyYamanouchi,
    Kohnert,
    DividedDifference,
};

inline constexpr std::array<Strategy, 7> all_strategies{
    Strategy::CompatibleSequences, Strategy::SlideWords, Strategy::ReducedDiagrams, Strategy::SSBT,
    Strategy::KeyYamanouchi,       Strategy::Kohnert,    Strategy::DividedDifference,
};

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

Polynomial schubert_polynomial(const Permutation& w, Strategy strategy, Execution exec = Execution::serial);

enum class KeyStrategy { SKT, Kohnert };
Polynomial key_polynomial(const WeakComposition& a, KeyStrategy strategy = KeyStrategy::SKT);

// Multiplicity of each basis index.
using Expansion = std::map<WeakComposition, Coefficient>;

// des(rho) over non-virtual reduced words of w.
Expansion slide_expansion(const Permutation& w);
// Weights of the Yamanouchi reduced diagrams of w.
Expansion key_expansion(const Permutation& w);
// des(T) over non-virtual standard key tableaux of shape a.
Expansion key_slide_expansion(const WeakComposition& a);

// Oracle: divided differences applied to the staircase monomial.
Polynomial schubert_by_divided_differences(const Permutation& w);

}  // namespace schubert
