#pragma once

#include <json.hpp>

#include "qnc/centers.hpp"
#include "qnc/diophantine.hpp"
#include "qnc/root_of_unity.hpp"

namespace qnc {

using nlohmann::json;

// Exact integers cross the wire as numbers while they fit in 64 bits and as
// decimal strings beyond that; nothing is ever silently truncated.
json int_to_json(const Int& v);
json vec_to_json(const IntVec& v);
json mat_to_json(const IntMat& m);

json to_json(const CenterDescription& d);
json to_json(const WCenterDescription& d);
json to_json(const SchubertCenter& d);
json to_json(const std::vector<CovariantDatum>& d, const RootSystem& rs);
json to_json(const PIDegreeReport& r);
json to_json(const BlockConfig& cfg);

}  // namespace qnc
