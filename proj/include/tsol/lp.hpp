// Exact rational simplex in standard form, Bland's rule throughout.
// Small and dense on purpose: every LP in this project has at most a handful
// of rows.

#pragma once

#include "tsol/rational.hpp"

#include <vector>

namespace tsol {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat value;     // optimal c.x
  RatVec x;      // primal solution
  RatVec dual;   // row multipliers pi with pi.A >= c, pi.b = value
  std::vector<int> basis;
};

// max c.x subject to A x = b, x >= 0.
LpResult solve_lp_standard(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

}  // namespace tsol
