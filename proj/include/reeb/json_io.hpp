#pragma once

// JSON wire formats shared by the library and the CLI.
//
//   PerturbedRational  {"base": "p/q", "eps": "c/d"}
//   Ellipsoid          {"a": PR, "b": PR}
//   ReebOrbit          {"gen": "alpha"|"beta", "mult": k}
//   CobordismData      {"inner": Ellipsoid, "outer": Ellipsoid[, "embedding": true]}
//   Setting            {"kind": "symplectization", "ellipsoid": ...} or
//                      {"kind": "cobordism", "inner": ..., "outer": ...}
//   AsymptoticData     {"setting": Setting, "pos": [orbit...], "neg": [orbit...]}
//   Building           {"cobordism": ..., "levels": [{"kind", "curves": [{"pos", "neg"}]}...],
//                       "bottom": orbit, "top": orbit}
//
// Parsers throw std::invalid_argument on malformed input.

#include "reeb/building.hpp"
#include "reeb/checkers.hpp"

#include "json.hpp"

namespace reeb {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const PerturbedRational& x);
Json to_json(const ReebOrbit& o);
Json to_json(const Ellipsoid& e);
Json to_json(const CobordismData& c);
Json to_json(const Setting& s);
Json to_json(const AsymptoticData& d);
Json to_json(const Building& b);
Json to_json(const BuildingDiagnostics& d);
Json to_json(const Verdict& v);
Json to_json(const NopeInstance& n);
Json to_json(const AreaObstruction& a);

Rational rational_from_json(const Json& j);
PerturbedRational perturbed_from_json(const Json& j);
ReebOrbit orbit_from_json(const Json& j);
Ellipsoid ellipsoid_from_json(const Json& j);
CobordismData cobordism_from_json(const Json& j);
Setting setting_from_json(const Json& j);
AsymptoticData asymptotic_data_from_json(const Json& j);
Building building_from_json(const Json& j);

}  // namespace reeb
