#include "schubert/kohnert.hpp"

#include <algorithm>
#include <unordered_set>

#include "schubert/guard.hpp"

namespace schubert {

std::optional<Diagram> kohnert_move(const Diagram& d, int row) {
    std::optional<Cell> rightmost;
    for (const auto& c : d.cells())
        if (c.row == row) rightmost = c;
    if (!rightmost) return std::nullopt;
    for (int target = row - 1; target >= 1; --target) {
        Cell landing{target, rightmost->col};
        if (d.contains(landing)) continue;
        Diagram out = d;
        out.erase(*rightmost);
        out.insert(landing);
        return out;
    }
    return std::nullopt;
}

namespace {

std::vector<int> occupied_rows(const Diagram& d) {
    std::vector<int> rows;
    for (const auto& c : d.cells())
        if (rows.empty() || rows.back() != c.row) rows.push_back(c.row);
    return rows;
}

std::vector<Diagram> successors(const Diagram& d) {
    std::vector<Diagram> out;
    for (int row : occupied_rows(d))
        if (auto moved = kohnert_move(d, row)) out.push_back(std::move(*moved));
    return out;
}

}  // namespace

std::vector<Diagram> kohnert_closure(const Diagram& d, Execution exec) {
    std::unordered_set<Diagram, DiagramHash> seen{d};
    std::vector<Diagram> frontier{d};
    while (!frontier.empty()) {
        std::vector<std::vector<Diagram>> expanded(frontier.size());
        const auto count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::parallel)
        for (long k = 0; k < count; ++k) expanded[k] = successors(frontier[k]);

        std::vector<Diagram> next;
        for (auto& batch : expanded)
            for (auto& e : batch)
                if (seen.insert(e).second) next.push_back(std::move(e));
        check_closure(seen.size(), "Kohnert closure");
        frontier = std::move(next);
    }
    std::vector<Diagram> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial kohnert_polynomial(const Diagram& d, Execution exec) {
    Polynomial p;
    for (const auto& k : kohnert_closure(d, exec)) {
        auto weight = k.weight();
        if (!weight.is_virtual()) p.add_term(weight, 1);
    }
    return p;
}

}  // namespace schubert
