#include "tsol/pl_concave.hpp"

#include <algorithm>

namespace tsol {

PLConcave build_pl(const ReflexivePolytope& p, std::vector<AffineForm> candidates,
                   int piece_cap) {
  if (candidates.empty()) fail(Errc::degenerate_input, "build_pl: no pieces");
  const int n = p.dim();

  std::sort(candidates.begin(), candidates.end(), [](const AffineForm& f, const AffineForm& g) {
    if (f.a != g.a) return lex_less(f.a, g.a);
    return f.b < g.b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (static_cast<int>(candidates.size()) > piece_cap)
    fail(Errc::degenerate_input, "build_pl: piece count exceeds the configured cap");

  // Cell of piece j: P intersected with { piece_j <= piece_l } for all l.
  std::vector<AffineForm> base;
  for (const Facet& f : p.facets()) base.push_back({f.normal, -f.offset});

  PLConcave out;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    std::vector<AffineForm> constraints = base;
    for (std::size_t l = 0; l < candidates.size(); ++l) {
      if (l == j) continue;
      constraints.push_back({candidates[j].a - candidates[l].a,
                             candidates[j].b - candidates[l].b});
    }
    auto hull = intersect_halfspaces(constraints, n);
    if (!hull) continue;  // piece never active on a full-dimensional set
    PLCell cell;
    cell.piece = static_cast<int>(out.pieces.size());
    cell.hull = std::move(*hull);
    cell.tri = fan_triangulation(cell.hull, cell.hull.vertices.front());
    out.pieces.push_back(candidates[j]);
    out.cells.push_back(std::move(cell));
  }

  if (out.pieces.empty())
    fail(Errc::degenerate_input, "build_pl: reduction left no active piece");

  // W and the exact tiling check: cell volumes must add up to vol(P).
  Rat tiled = 0;
  for (const PLCell& c : out.cells) {
    for (const Simplex& s : c.tri.simplices) tiled += simplex_volume(s);
    out.vertex_set.insert(out.vertex_set.end(), c.hull.vertices.begin(), c.hull.vertices.end());
  }
  if (tiled != p.volume())
    fail(Errc::degenerate_input, "build_pl: subdivision does not tile the polytope");
  std::sort(out.vertex_set.begin(), out.vertex_set.end(), lex_less);
  out.vertex_set.erase(std::unique(out.vertex_set.begin(), out.vertex_set.end()),
                       out.vertex_set.end());
  return out;
}

PLConcave product_config(const ReflexivePolytope& p, const Direction& mu) {
  return build_pl(p, {mu.hamiltonian()});
}

PLConcave from_creases(const ReflexivePolytope& p, const std::vector<AffineForm>& data,
                       bool include_zero, int piece_cap) {
  std::vector<AffineForm> candidates = data;
  if (include_zero) candidates.push_back(constant_form(p.dim(), 0));
  return build_pl(p, std::move(candidates), piece_cap);
}

PLConcave twist(const PLConcave& g, const Direction& mu) {
  PLConcave out = g;
  for (AffineForm& f : out.pieces) {
    f.a = f.a + mu.mu;
    f.b += mu.c;
  }
  return out;
}

}  // namespace tsol
