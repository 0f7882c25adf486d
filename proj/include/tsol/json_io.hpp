// JSON schemas for every external surface. Exact rationals travel as
// strings "p/q"; decimal approximations sit alongside under *_approx keys.

#pragma once

#include "tsol/functionals.hpp"
#include "tsol/stability.hpp"

#include "json.hpp"

#include <string>

namespace tsol {

using OJson = nlohmann::ordered_json;

OJson rat_json(const Rat& q);
OJson rat_vec_json(const RatVec& v);
Rat rat_from_json(const OJson& j);
RatVec rat_vec_from_json(const OJson& j);

OJson polytope_json(const ReflexivePolytope& p);
ReflexivePolytope polytope_from_json(const OJson& j);

// Catalog name, or a path to a polytope JSON file.
ReflexivePolytope resolve_polytope(const std::string& name_or_path);

OJson pl_json(const PLConcave& g);
PLConcave pl_from_json(const ReflexivePolytope& p, const OJson& j);

OJson na_json(const NAEnergies& na);
NAEnergies na_from_json(const OJson& j);

OJson direction_json(const Direction& d);
Direction direction_from_json(const OJson& j);

OJson invariants_json(const InvariantsSummary& s);

OJson jt_json(const JtResult& r);

OJson report_json(const StabilityReport& rep);
StabilityReport report_from_json(const OJson& j);

OJson destabilizer_json(const DestabilizerResult& r);

OJson diagnostics_json(const Diagnostics& d);

OJson potential_json(const ConvexPotential& psi);

}  // namespace tsol
