// Non-Archimedean energies of a toric test configuration and the exact
// twist-minimization of J by rational linear programming.

#pragma once

#include "tsol/invariants.hpp"
#include "tsol/pl_concave.hpp"

#include <utility>
#include <vector>

namespace tsol {

struct NAEnergies {
  Rat e_na;      // (1/vol P) \int_P G
  Rat l0_na;     // max_P G
  Rat l_na;      // G(0), the toric Ding term
  Rat e_eta_na;  // (1/vol P) \int_P G (1 + h_eta)
  Rat d_eta_na;  // l_na - e_eta_na
  Rat j_na;      // l0_na - e_na
  Rat j_eta_na;  // l0_na - e_eta_na
};

// Center a raw direction: choose c so the Hamiltonian has DH-mean zero.
Direction centered(const ReflexivePolytope& p, const RatVec& mu);

bool is_centered(const ReflexivePolytope& p, const Direction& eta);

NAEnergies na_energies(const ReflexivePolytope& p, const PLConcave& g, const Direction& eta);

// Exact moments (1/vol P) \int_P G^q for q = 0..order, order <= 4.
std::vector<Rat> dh_pushforward_moments(const ReflexivePolytope& p, const PLConcave& g,
                                        int order);

enum class JtMode { plain, eta };

struct JtResult {
  Direction mu_star;  // minimizing twist; scaling component fixed to 0
  Rat value;          // inf over twists of J^NA (plain) or J_eta^NA (eta)
  // Active constraint vertices with convex weights exhibiting the zero
  // subgradient at the optimum.
  std::vector<std::pair<RatVec, Rat>> certificate;
};

JtResult jt_min(const ReflexivePolytope& p, const PLConcave& g, const Direction& eta,
                JtMode mode);

}  // namespace tsol
