#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

// Raised when an enumeration would exceed the configured size bounds.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    std::size_t max_cells = 24;
    std::size_t max_closure = 1'000'000;
};

// Read once from SCHUBERT_MAX_CELLS and SCHUBERT_MAX_CLOSURE.
const Limits& limits();

void check_cells(std::size_t cells, const char* what);
void check_closure(std::size_t states, const char* what);

}  // namespace schubert
