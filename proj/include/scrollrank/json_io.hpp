#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "scrollrank/audit.hpp"
#include "scrollrank/bounds.hpp"
#include "scrollrank/decouple.hpp"
#include "scrollrank/profile_point.hpp"
#include "scrollrank/terracini.hpp"

// File formats (all rationals are decimal-free "p/q" strings, "/q" omitted
// when the denominator is 1):
//   SymPoly       {"m", "degree", "coords": [{"alpha": [ints], "value": "p/q"}]}
//   ProfilePoint  {"m", "n", "profile": [ints], "blocks": [[SymPoly,...],...]}
//                 (blocks indexed [output][degree slot])
//   Model         {"m", "n", "d", "r", "V": rows, "W": rows, "C": rows}
//   Dense map     {"m", "n", "d", "terms": [{"output", "alpha", "coeff"}]}
//   Directions    {"directions": [{"v": ["p/q",...], "w": [...]}, ...]}

namespace scrollrank {

using Json = nlohmann::ordered_json;

Json to_json(const SymPoly& p);
SymPoly sympoly_from_json(const Json& j);

Json to_json(const ProfilePoint& p);
ProfilePoint profile_point_from_json(const Json& j);

Json to_json(const DecoupledModel& model);
DecoupledModel model_from_json(const Json& j);

Json dense_terms_to_json(const std::vector<DenseTerm>& terms, int m, int n, int d);
std::vector<DenseTerm> dense_terms_from_json(const Json& j, int& m, int& n, int& d);

Json directions_to_json(const std::vector<Direction>& dirs);
std::vector<Direction> directions_from_json(const Json& j);

Json to_json(const RecoveryReport& report);
Json to_json(const SecantProbe& probe);
Json to_json(const BoundsReport& report);
Json to_json(const AHAuditReport& report);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace scrollrank
