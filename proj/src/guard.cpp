#include "schubert/guard.hpp"

#include <cstdlib>

namespace schubert {

namespace {

std::size_t read_env(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') return fallback;
    return static_cast<std::size_t>(value);
}

}  // namespace

const Limits& limits() {
    static const Limits cached{read_env("SCHUBERT_MAX_CELLS", 24),
                               read_env("SCHUBERT_MAX_CLOSURE", 1'000'000)};
    return cached;
}

void check_cells(std::size_t cells, const char* what) {
    if (cells > limits().max_cells)
        throw GuardExceeded(std::string(what) + ": " + std::to_string(cells) + " cells exceeds limit " +
                            std::to_string(limits().max_cells));
}

void check_closure(std::size_t states, const char* what) {
    if (states > limits().max_closure)
        throw GuardExceeded(std::string(what) + ": closure exceeds " + std::to_string(limits().max_closure) +
                            " states");
}

}  // namespace schubert
