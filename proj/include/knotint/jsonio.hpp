// JSON serialisation of invariant results (deterministic term ordering).

#pragma once

#include <json.hpp>

#include "knotint/intersect.hpp"
#include "knotint/oracles.hpp"
#include "knotint/ring.hpp"

namespace knotint {

nlohmann::json poly_to_json(const InvariantPoly& p);
InvariantPoly poly_from_json(const nlohmann::json& j);

nlohmann::json laurent_to_json(const LaurentPoly& p);
nlohmann::json cyclotomic_to_json(const CyclotomicPoly& p);

// Full invariant record for one braid: gamma, jones, ado, alexander, timings.
nlohmann::json invariant_record(const BraidWord& b, int N, const Caps& caps);

}  // namespace knotint
