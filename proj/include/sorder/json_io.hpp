#pragma once

#include <iosfwd>

#include "json.hpp"
#include "sorder/ordered_algebra.hpp"

namespace sorder::algebra {

// {"order": s, "terms": [{"p":.., "q":.., "re":.., "im":..}, ...]}
// terms are emitted sorted by (p, q).
nlohmann::json poly_to_json(const OrderedPoly& poly);

// Throws sorder::error on a malformed document.
OrderedPoly poly_from_json(const nlohmann::json& j);

}  // namespace sorder::algebra
