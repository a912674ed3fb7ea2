#pragma once

#include <string>

#include <json.hpp>

#include "tropgroups/circle_bundles.hpp"
#include "tropgroups/rational.hpp"
#include "tropgroups/root_data.hpp"
#include "tropgroups/stability.hpp"
#include "tropgroups/trop_core.hpp"
#include "tropgroups/trop_group.hpp"

namespace tropgroups {

// Insertion-ordered objects keep the output byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const QVec& v);
Json to_json(const ZVec& v);
Json to_json(const TropValue& v);
Json to_json(const TropMatrix& a);
Json to_json(const FundamentalGroupElement& e);

// Rationals are read from "p/q" strings or JSON integers.
Rational rational_from_json(const Json& j);
QVec qvec_from_json(const Json& j);
ZVec zvec_from_json(const Json& j);
TropMatrix trop_matrix_from_json(const Json& j);

// {"m", "alpha", "w", "j"}; w is an element index, or an array of 0-based
// point images when the group carries a permutation model.
Json to_json(const CircleCocycle& c);
CircleCocycle cocycle_from_json(const Json& j, const GroupPtr& g);

Json to_json(const GaugeTriple& g);
Json to_json(const ComponentDescription& d, const TropicalGroup& g);
Json to_json(const StabilityReport& r);

Json group_info(const TropicalGroup& g);

}  // namespace tropgroups
