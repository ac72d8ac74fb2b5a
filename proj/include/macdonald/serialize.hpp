#pragma once

#include <json.hpp>

#include "macdonald/polyring.hpp"
#include "macdonald/scalars.hpp"
#include "macdonald/shapes.hpp"

namespace macdonald {

using Json = nlohmann::ordered_json;

/// Exact rationals as "p/q" strings (plain decimal for integers); symbolic
/// values as {"num": {"e1,e2": "c"}, "den": {...}, "gens": [...]} where the
/// exponent tuples run over "gens", the generators that actually occur.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"n": n, "terms": [{"exp": [...], "coeff": <scalar>}]}, leading term first.
Json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json composition_to_json(const Composition& c);
Json permutation_to_json(const Permutation& w);

}  // namespace macdonald
