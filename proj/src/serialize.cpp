#include "schubert/serialize.hpp"

#include <algorithm>
#include <map>

namespace schubert {

using nlohmann::json;

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [exponent, c] : p.terms())
        out.push_back({{"coefficient", c}, {"exponents", std::vector<int>(exponent.parts().begin(), exponent.parts().end())}});
    return out;
}

json to_json(const WeakComposition& a) {
    if (a.is_virtual()) return "virtual";
    return std::vector<int>(a.parts().begin(), a.parts().end());
}

json to_json(const Diagram& d) {
    json out = json::array();
    for (const auto& c : d.cells()) out.push_back({{"row", c.row}, {"col", c.col}});
    return out;
}

json to_json(const LabeledDiagram& d) {
    json out = json::array();
    for (const auto& c : d.cells()) out.push_back({{"row", c.row}, {"col", c.col}, {"label", c.label}});
    return out;
}

json to_json(const KeyTableau& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(r);
    return {{"shape", to_json(t.shape())}, {"rows", rows}};
}

json to_json(const BalancedTableau& t) {
    return {{"permutation", std::vector<int>(t.permutation().values().begin(), t.permutation().values().end())},
            {"cells", to_json(t.as_labeled())}};
}

json to_json(const Expansion& e) {
    json out = json::array();
    for (const auto& [index, c] : e) out.push_back({{"index", to_json(index)}, {"coefficient", c}});
    return out;
}

Polynomial polynomial_from_json(const json& j) {
    Polynomial p;
    for (const auto& term : j) p.add_term(term.at("exponents").get<std::vector<int>>(), term.at("coefficient").get<Coefficient>());
    return p;
}

LabeledDiagram labeled_diagram_from_json(const json& j) {
    std::vector<LabeledCell> cells;
    for (const auto& c : j) cells.push_back({c.at("row").get<int>(), c.at("col").get<int>(), c.at("label").get<int>()});
    return LabeledDiagram(std::move(cells));
}

std::string expansion_text(const Expansion& e, std::string_view symbol, int length) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [index, c] : e) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += std::string(symbol) + index.to_string(length);
    }
    return out;
}

namespace {

std::string render_cells(const std::map<std::pair<int, int>, std::string>& cells, int lowest, int highest, int width) {
    int cell_width = 1;
    for (const auto& [pos, text] : cells) cell_width = std::max(cell_width, static_cast<int>(text.size()));
    std::string out;
    auto line = [&](int row) {
        std::string s = "|";
        for (int col = 1; col <= width; ++col) {
            auto it = cells.find({row, col});
            std::string text = it == cells.end() ? "." : it->second;
            s += " " + std::string(cell_width - text.size(), ' ') + text;
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    for (int row = highest; row >= std::max(lowest, 1); --row) out += line(row);
    out += "+" + std::string(static_cast<std::size_t>(width * (cell_width + 1)), '-') + "\n";
    for (int row = 0; row >= lowest; --row) out += line(row);
    return out;
}

}  // namespace

std::string render_art(const LabeledDiagram& d) {
    std::map<std::pair<int, int>, std::string> cells;
    int lowest = 1, highest = 0, width = 0;
    for (const auto& c : d.cells()) {
        cells[{c.row, c.col}] = std::to_string(c.label);
        lowest = std::min(lowest, c.row);
        highest = std::max(highest, c.row);
        width = std::max(width, c.col);
    }
    return render_cells(cells, lowest, highest, width);
}

std::string render_art(const Diagram& d) {
    std::map<std::pair<int, int>, std::string> cells;
    int lowest = 1, highest = 0, width = 0;
    for (const auto& c : d.cells()) {
        cells[{c.row, c.col}] = "#";
        lowest = std::min(lowest, c.row);
        highest = std::max(highest, c.row);
        width = std::max(width, c.col);
    }
    return render_cells(cells, lowest, highest, width);
}

std::string render_art(const KeyTableau& t) {
    std::vector<LabeledCell> cells;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            cells.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1, t.rows[r][c]});
    return render_art(LabeledDiagram(std::move(cells)));
}

}  // namespace schubert
