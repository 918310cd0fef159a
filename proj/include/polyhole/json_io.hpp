#pragma once

#include <json.hpp>

#include "polyhole/groebner.hpp"
#include "polyhole/semigroup.hpp"
#include "polyhole/very_ample.hpp"

namespace polyhole {

using json = nlohmann::ordered_json;

json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

json to_json(const HRep& rep);
json to_json(const HoleReport& report);
json to_json(const KNormalReport& report);
json to_json(const VeryAmplenessCertificate& cert);
json to_json(const GroebnerReport& report);

}  // namespace polyhole
