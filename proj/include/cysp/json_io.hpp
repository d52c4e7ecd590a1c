#pragma once

// JSON forms of colorings, violations, masks and reports.
//
// Coloring: {"group": "Z/8" | "4x3", "A": [...], "B": [...]}. Elements of a
// cyclic group are residues; elements of a product are residue arrays. "B"
// is written for reference and ignored on input.

#include <nlohmann/json.hpp>

#include "cysp/report.hpp"
#include "cysp/search.hpp"
#include "cysp/verifier.hpp"

namespace cysp {

nlohmann::json element_to_json(const AbelianGroup& g, Element x);
Element element_from_json(const AbelianGroup& g, const nlohmann::json& j);

nlohmann::json to_json(const Coloring& c);
// Throws std::invalid_argument on a missing or malformed field.
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Violation& v, const AbelianGroup& g);
nlohmann::json to_json(const PairClassMask& m);
nlohmann::json to_json(const SpectrumReport& r);

}  // namespace cysp
