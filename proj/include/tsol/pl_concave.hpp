// Toric test configurations as rational piecewise-linear concave functions
// G = min_j (<a_j, x> + b_j) on the moment polytope, together with the exact
// subdivision of P into cells where a single piece is active.

#pragma once

#include "tsol/direction.hpp"
#include "tsol/polytope.hpp"

#include <vector>

namespace tsol {

struct PLCell {
  int piece = 0;
  HullResult hull;
  Triangulation tri;
};

struct PLConcave {
  std::vector<AffineForm> pieces;   // irredundant: every piece active somewhere
  std::vector<PLCell> cells;        // closed cells tiling P
  std::vector<RatVec> vertex_set;   // W: all cell vertices, lex-sorted

  Rat eval(const RatVec& x) const {
    Rat v = pieces.front()(x);
    for (std::size_t j = 1; j < pieces.size(); ++j) v = std::min(v, pieces[j](x));
    return v;
  }

  bool is_single_piece() const { return pieces.size() == 1; }
  bool is_trivial() const { return is_single_piece() && is_zero(pieces[0].a) && pieces[0].b == 0; }
};

inline constexpr int kDefaultPieceCap = 12;

// Reduce candidate pieces against P and build the active-cell subdivision.
PLConcave build_pl(const ReflexivePolytope& p, std::vector<AffineForm> candidates,
                   int piece_cap = kDefaultPieceCap);

// G of the product configuration generated by mu.
PLConcave product_config(const ReflexivePolytope& p, const Direction& mu);

// G = min(0 if include_zero, all <a_j, x> + b_j); redundant pieces dropped.
PLConcave from_creases(const ReflexivePolytope& p, const std::vector<AffineForm>& data,
                       bool include_zero, int piece_cap = kDefaultPieceCap);

// Every piece shifted by (mu.mu, mu.c); subdivision reused unchanged.
PLConcave twist(const PLConcave& g, const Direction& mu);

}  // namespace tsol
