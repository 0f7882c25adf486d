// Finite-k weight oracle: Riemann-Roch style sums over lattice points of kP
// that converge to the exact non-Archimedean energies.

#pragma once

#include "tsol/direction.hpp"
#include "tsol/pl_concave.hpp"

namespace tsol {

struct WeightSample {
  long k = 0;
  long count = 0;       // N_k = #(kP intersect M)
  Rat lambda_mean;      // (1/(k N_k)) sum lambda_i       -> E^NA
  Rat lambda_max;       // max lambda_i / k               -> L0^NA at divisible k
  Rat lambda_min;
  Rat mu_weight_min;    // min over chi of (mu-weight)/k
  Rat pairing_sum;      // (1/(k^2 N_k)) sum lambda_i mu_i -> <(X,L), mu>
};

// lambda(chi) = floor(k G(chi/k)); mu-weight(chi) = <mu.mu, chi> + k mu.c.
WeightSample weight_oracle(const ReflexivePolytope& p, const PLConcave& g,
                           const Direction& mu, long k);

// Smallest dilation at which the weight maximum is exactly max_P G: every
// subdivision vertex of G becomes a lattice point with integral G-value.
long stabilizing_k(const PLConcave& g);

}  // namespace tsol
