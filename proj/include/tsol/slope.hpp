// Archimedean slope estimates along torus rays against the exact
// non-Archimedean values of the corresponding product configuration.

#pragma once

#include "tsol/flow.hpp"
#include "tsol/na_energies.hpp"

#include <string>
#include <vector>

namespace tsol {

struct SlopeRow {
  std::string functional;
  double slope = 0;     // (F(psi^T) - F(psi^{T/2})) / (T/2)
  double na_value = 0;  // exact non-Archimedean value
  double gap_abs = 0;
  double gap_rel = 0;
};

struct SlopeOptions {
  double t_max = 40;
  int nodes = 257;
  double box_halfwidth = 8;
};

// Rows for E, E_eta, L0, L, J, D_eta, J_T along the ray of product(mu).
// L is affine along the orbit with slope exactly mu.c (translation
// invariance of the canonical integral); every other row is measured.
std::vector<SlopeRow> slope_check(const ReflexivePolytope& p, const Direction& mu,
                                  const Direction& eta, const SlopeOptions& opt);

}  // namespace tsol
