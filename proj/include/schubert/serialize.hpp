#pragma once

#include <string>

#include "json.hpp"
#include "schubert/balanced.hpp"
#include "schubert/core.hpp"
#include "schubert/diagram.hpp"
#include "schubert/insertion.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

// [{"coefficient": c, "exponents": [..]}, ...] in graded reverse-lex order.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const WeakComposition& a);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const LabeledDiagram& d);
nlohmann::json to_json(const KeyTableau& t);
nlohmann::json to_json(const BalancedTableau& t);
// [{"index": [...], "coefficient": c}, ...]
nlohmann::json to_json(const Expansion& e);

Polynomial polynomial_from_json(const nlohmann::json& j);
LabeledDiagram labeled_diagram_from_json(const nlohmann::json& j);

// "k(3,1,0,1) + 2*k(3,2,0,0)" in lexicographic order of indices, each padded
// to at least `length` parts.
std::string expansion_text(const Expansion& e, std::string_view symbol, int length);

// Rows from the top down with a rule under row 1; rows <= 0 sit below it.
std::string render_art(const LabeledDiagram& d);
std::string render_art(const Diagram& d);
std::string render_art(const KeyTableau& t);

}  // namespace schubert
