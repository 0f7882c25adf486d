// Duistermaat-Heckman pairings, the Futaki character, the extremal direction,
// m_X, and the Demazure-root reductivity test.
//
// Normalization: both the inner product and the Futaki character are divided
// by vol(P), so that F(mu) = <mu, eta> holds verbatim and <(0,1), eta> = 0 is
// automatic. Spelled out:
//   pairing(xi, zeta) = (1/vol P) \int_P h_xi h_zeta dx
//   futaki(xi)        = ORIENTATION * (h_xi(0) - (1/vol P) \int_P h_xi dx)

#pragma once

#include "tsol/direction.hpp"
#include "tsol/polytope.hpp"

#include <vector>

namespace tsol {

// Sign of the weight filtration. Fixed once by matching the finite-k weight
// oracle on the blown-up plane (see test_invariants); do not edit casually.
inline constexpr int ORIENTATION = +1;

using GramMatrix = std::vector<RatVec>;  // (n+1) x (n+1), basis (e_1..e_n, 1)

Rat pairing(const ReflexivePolytope& p, const Direction& xi, const Direction& zeta);

Rat futaki(const ReflexivePolytope& p, const Direction& xi);

GramMatrix gram_matrix(const ReflexivePolytope& p);

// Unique eta in (N_R (+) R)_Q with futaki(xi) = pairing(xi, eta) for all xi.
Direction extremal(const ReflexivePolytope& p);

// min over vertices of 1 + h_eta; the soliton existence gate is m_x > 0.
Rat m_x(const ReflexivePolytope& p, const Direction& eta);

struct DemazureResult {
  std::vector<RatVec> roots;            // all Demazure roots of the fan
  std::vector<RatVec> eta_orthogonal;   // subset pairing to zero with eta
  bool reductive = false;               // eta-orthogonal subset is symmetric
};

DemazureResult demazure_reductivity(const ReflexivePolytope& p, const Direction& eta);

// The assembled exact pipeline every verdict starts from.
struct InvariantsSummary {
  Rat volume;
  RatVec barycenter;
  RatVec futaki_vector;  // (F(e_1), ..., F(e_n))
  Direction eta;
  Rat eta_norm_sq;       // pairing(eta, eta)
  Rat m_x;
  DemazureResult roots;
};

InvariantsSummary invariants_summary(const ReflexivePolytope& p);

}  // namespace tsol
