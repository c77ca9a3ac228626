#pragma once

#include <json.hpp>

#include "horogrowth/cayley_bfs.hpp"
#include "horogrowth/gfsa.hpp"
#include "horogrowth/group.hpp"
#include "horogrowth/growth_formulas.hpp"

namespace horogrowth {

using Json = nlohmann::ordered_json;

// Integers are written as decimal strings. Readers also accept JSON numbers.

Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);

Json to_json(const SeriesPrefix& s);
SeriesPrefix series_from_json(const Json& j);

Json to_json(const GrowthAutomaton& machine);
GrowthAutomaton machine_from_json(const Json& j);

Json to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);

/// {"m", "radius", "total", "horocyclic", "chi"}; chi may be omitted.
Json to_json(const SphereCounts& s, const CosetCensus* chi = nullptr);
/// {"0": [...], "-1": [...], ...} from level 0 downwards.
Json census_to_json(const CosetCensus& c);

}  // namespace horogrowth
