#pragma once

#include <optional>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/execution.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// Moves the rightmost cell of `row` to the highest empty position below it in
// its column, staying in rows >= 1. Empty when no such position exists.
std::optional<Diagram> kohnert_move(const Diagram& d, int row);

// Every diagram reachable by Kohnert moves, d included, sorted.
std::vector<Diagram> kohnert_closure(const Diagram& d, Execution exec = Execution::serial);

// Sum of x^wt over the non-virtual closure.
Polynomial kohnert_polynomial(const Diagram& d, Execution exec = Execution::serial);

}  // namespace schubert
