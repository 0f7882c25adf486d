#include "tsol/catalog.hpp"

#include "tsol/errors.hpp"

namespace tsol {

namespace {

RatVec v1(long a) { return {Rat(a)}; }
RatVec v2(long a, long b) { return {Rat(a), Rat(b)}; }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"P1",
               {v1(-1), v1(1)},
               true,
               true,
               "projective line; round metric"});
  c.push_back({"P2",
               {v2(-1, -1), v2(2, -1), v2(-1, 2)},
               true,
               true,
               "projective plane; Fubini-Study"});
  c.push_back({"P1xP1",
               {v2(-1, -1), v2(1, -1), v2(-1, 1), v2(1, 1)},
               true,
               true,
               "quadric surface; product metric"});
  c.push_back({"BL1P2",
               {v2(-1, 0), v2(0, -1), v2(2, -1), v2(-1, 2)},
               false,
               true,
               "one-point blow-up of the plane; no KE metric, m_X = 6/11 > 0"});
  c.push_back({"BL2P2",
               {v2(-1, 0), v2(0, -1), v2(1, -1), v2(1, 0), v2(-1, 2)},
               false,
               true,
               "two-point blow-up of the plane; m_X = 105/409 > 0"});
  c.push_back({"BL3P2",
               {v2(1, 0), v2(0, 1), v2(-1, 1), v2(-1, 0), v2(0, -1), v2(1, -1)},
               true,
               true,
               "three-point blow-up of the plane; hexagonal symmetry"});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool is_catalog_name(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  fail(Errc::degenerate_input, "unknown catalog entry: " + name);
}

ReflexivePolytope catalog_polytope(const std::string& name) {
  return ReflexivePolytope::from_vertices(catalog_entry(name).vertices);
}

PLConcave bl1p2_exceptional_normal_cone(const ReflexivePolytope& p) {
  // Exceptional facet has inward normal (1,1); vanishing order <x,(1,1)> + 1.
  RatVec dir = {Rat(1), Rat(1)};
  return from_creases(p, {{dir, Rat(1 - 2)}}, true);
}

}  // namespace tsol
