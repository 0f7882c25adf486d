#pragma once

#include "tsol/pl_concave.hpp"
#include "tsol/polytope.hpp"

#include <string>
#include <vector>

namespace tsol {

struct CatalogEntry {
  std::string name;
  std::vector<RatVec> vertices;
  bool kahler_einstein = false;   // vanishing barycenter: eta = 0
  bool mabuchi_soliton = false;   // m_X > 0 (the toric existence criterion)
  std::string note;
};

// The toric del Pezzo surfaces plus the projective line.
const std::vector<CatalogEntry>& catalog();

bool is_catalog_name(const std::string& name);

ReflexivePolytope catalog_polytope(const std::string& name);

const CatalogEntry& catalog_entry(const std::string& name);

// The deformation to the normal cone of the exceptional curve on the
// one-point blow-up of the plane, at the terminal blow-up parameter where
// the configuration degenerates to a twisted product (eps = 2):
// G(x) = x_1 + x_2 - 1.
PLConcave bl1p2_exceptional_normal_cone(const ReflexivePolytope& p);

}  // namespace tsol
