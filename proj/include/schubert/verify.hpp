#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "schubert/core.hpp"
#include "schubert/execution.hpp"

namespace schubert {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    // First failing input, empty when the check passed.
    std::string counterexample;

    void fail(std::string what);
};

bool all_passed(const std::vector<CheckResult>& results);

// `count` distinct permutations of S_n drawn with a fixed seed, sorted.
std::vector<Permutation> sample_permutations(int n, std::size_t count, std::uint64_t seed);

// One result per strategy: agreement with the divided-difference oracle.
std::vector<CheckResult> verify_cross_model(const std::vector<Permutation>& perms,
                                            Execution exec = Execution::serial);

// Reading word, ascend, insertion, Coxeter-Knuth and dual-equivalence
// correspondences over every w in S_n.
std::vector<CheckResult> verify_bijections(int n, Execution exec = Execution::serial);

// Swap, braid and relation moves are involutions at every level, over S_n.
std::vector<CheckResult> verify_involutions(int n, Execution exec = Execution::serial);

}  // namespace schubert
