// Verdict assembly for relative D-semistability and uniform relative
// D-stability over a named family of toric test configurations, plus a
// bounded destabilizer search.

#pragma once

#include "tsol/invariants.hpp"
#include "tsol/na_energies.hpp"
#include "tsol/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsol {

enum class Verdict {
  stable_on_family,
  semistable_boundary,
  destabilized,
  obstructed_mX,
  obstructed_reductivity,
};

const char* verdict_name(Verdict v);

struct FamilyMember {
  std::string name;
  bool is_product = false;  // provenance flag, not a property of G
  PLConcave config;
};

// Products along +-e_i plus deformation-to-normal-cone configurations for
// every facet and every vertex of P, over the full integer ladder of
// admissible blow-up parameters (the terminal rung degenerates to a twisted
// product and witnesses the boundary case).
std::vector<FamilyMember> product_family(const ReflexivePolytope& p);
std::vector<FamilyMember> normal_cone_family(const ReflexivePolytope& p);
std::vector<FamilyMember> full_family(const ReflexivePolytope& p);

struct MemberReport {
  std::string name;
  bool is_product = false;
  bool nontrivial = false;  // reduced G is nonconstant
  NAEnergies na;
  bool jt_ok = false;
  Rat jt_value;
  Direction jt_mu_star;
};

struct StabilityReport {
  std::string polytope_id;
  InvariantsSummary inv;
  bool eta_is_extremal = true;  // false when the caller overrode eta
  Direction eta;                // the eta actually used
  std::vector<MemberReport> members;
  bool has_uniform_epsilon = false;
  Rat uniform_epsilon;  // min of d_eta/jt over members with jt > 0
  Verdict verdict = Verdict::stable_on_family;
};

// eta_override, when set, replaces the extremal direction (it is centered
// before use). Verdict precedence: destabilizing evidence first, then the
// m_X and reductivity gates, then the boundary detection.
StabilityReport analyze(const ReflexivePolytope& p, const std::string& id,
                        const std::vector<FamilyMember>& family,
                        std::optional<Direction> eta_override = std::nullopt);

struct DestabilizerBudget {
  int max_pieces = 3;
  int max_denominator = 2;
};

struct DestabilizerResult {
  bool found_negative = false;
  bool budget_exhausted = false;
  long tested = 0;
  std::string description;
  PLConcave config;
  NAEnergies na;
  bool ratio_defined = false;
  Rat ratio;  // d_eta / jt for the best candidate (0 for boundary candidates)
};

// Deterministic enumeration of crease normals (facet normals and edge
// directions, both signs) with offsets on the 1/max_denominator grid.
// Returns on the first configuration with d_eta < 0, otherwise the
// minimizer of the ratio with the exhausted flag set.
std::optional<DestabilizerResult> destabilizer_search(const ReflexivePolytope& p,
                                                      const Direction& eta,
                                                      const DestabilizerBudget& budget);

}  // namespace tsol
