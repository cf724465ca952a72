#pragma once

#include <json.hpp>

#include "kronq/bases.hpp"
#include "kronq/laurent.hpp"
#include "kronq/torus.hpp"

namespace kronq {

// Schemas:
//   LaurentQ   -> [[v_exponent, "coefficient"], ...] sorted by exponent
//   CountPoly  -> [[w_exponent, "coefficient"], ...] sorted by exponent
//   TorusElem  -> {"terms": [{"e": [c1, c2], "coeff": <LaurentQ>}, ...]}
//                 with terms in graded-lex order
//   BasisExpansion -> {"family": "B", "primed": false,
//                      "terms": [{"label": {...}, "coeff": <LaurentQ>}, ...]}
//   BasisLabel -> {"kind": "mono", "m": .., "a": .., "b": ..}
//               | {"kind": "diag", "n": ..} | {"kind": "unit"}

nlohmann::json laurent_to_json(const LaurentQ& x);
LaurentQ laurent_from_json(const nlohmann::json& j);

nlohmann::json count_poly_to_json(const CountPoly& x);
CountPoly count_poly_from_json(const nlohmann::json& j);

nlohmann::json torus_to_json(const TorusElem& x);
TorusElem torus_from_json(const nlohmann::json& j);

nlohmann::json label_to_json(const BasisLabel& l);
BasisLabel label_from_json(const nlohmann::json& j);

nlohmann::json expansion_to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const nlohmann::json& j);

}  // namespace kronq
