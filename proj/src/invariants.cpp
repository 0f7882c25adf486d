#include "tsol/invariants.hpp"

#include "tsol/linalg.hpp"

#include <algorithm>

namespace tsol {

Rat pairing(const ReflexivePolytope& p, const Direction& xi, const Direction& zeta) {
  Rat integral = p.integrate_affine_product({xi.hamiltonian(), zeta.hamiltonian()});
  return integral / p.volume();
}

Rat futaki(const ReflexivePolytope& p, const Direction& xi) {
  p.require_reflexive("futaki");
  Rat mean = p.integrate_affine_product({xi.hamiltonian()}) / p.volume();
  return Rat(ORIENTATION) * (xi.c - mean);
}

GramMatrix gram_matrix(const ReflexivePolytope& p) {
  const int n = p.dim();
  auto basis = [&](int i) {
    if (i < n) {
      Direction d = Direction::zero(n);
      d.mu[i] = 1;
      return d;
    }
    return Direction::identity(n);
  };
  GramMatrix g(n + 1, RatVec(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      g[i][j] = pairing(p, basis(i), basis(j));
      g[j][i] = g[i][j];
    }
  return g;
}

Direction extremal(const ReflexivePolytope& p) {
  p.require_reflexive("extremal");
  const int n = p.dim();
  GramMatrix g = gram_matrix(p);
  RatVec rhs(n + 1);
  for (int i = 0; i < n; ++i) {
    Direction e = Direction::zero(n);
    e.mu[i] = 1;
    rhs[i] = futaki(p, e);
  }
  rhs[n] = futaki(p, Direction::identity(n));  // always 0
  auto sol = linsolve(g, rhs);
  if (!sol) fail(Errc::singular_gram, "extremal: Gram matrix is singular");
  Direction eta;
  eta.mu.assign(sol->begin(), sol->begin() + n);
  eta.c = (*sol)[n];
  return eta;
}

Rat m_x(const ReflexivePolytope& p, const Direction& eta) {
  p.require_reflexive("m_x");
  Rat best = 1 + eta.h(p.vertices().front());
  for (const RatVec& v : p.vertices()) best = std::min(best, 1 + eta.h(v));
  return best;
}

DemazureResult demazure_reductivity(const ReflexivePolytope& p, const Direction& eta) {
  p.require_reflexive("demazure_reductivity");
  const int n = p.dim();

  // Candidate characters satisfy <alpha, v_i> >= -1 for every fan ray, which
  // is exactly membership in -P; enumerate its lattice points.
  std::vector<RatVec> neg_vertices;
  for (const RatVec& v : p.vertices()) neg_vertices.push_back(-v);
  ReflexivePolytope neg = ReflexivePolytope::from_vertices(neg_vertices);

  DemazureResult out;
  for (const std::vector<long>& pt : neg.lattice_points(1)) {
    RatVec alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = pt[i];
    int hits = 0;
    bool ok = true;
    for (const Facet& f : p.facets()) {
      Rat d = dot(alpha, f.normal);
      if (d == -1)
        ++hits;
      else if (d < 0) {
        ok = false;
        break;
      }
    }
    if (ok && hits == 1) out.roots.push_back(alpha);
  }
  std::sort(out.roots.begin(), out.roots.end(), lex_less);

  for (const RatVec& alpha : out.roots)
    if (dot(alpha, eta.mu) == 0) out.eta_orthogonal.push_back(alpha);

  out.reductive = true;
  for (const RatVec& alpha : out.eta_orthogonal) {
    RatVec neg_alpha = -alpha;
    if (!std::binary_search(out.eta_orthogonal.begin(), out.eta_orthogonal.end(), neg_alpha,
                            lex_less)) {
      out.reductive = false;
      break;
    }
  }
  return out;
}

InvariantsSummary invariants_summary(const ReflexivePolytope& p) {
  InvariantsSummary s;
  s.volume = p.volume();
  s.barycenter = p.barycenter();
  const int n = p.dim();
  s.futaki_vector.resize(n);
  for (int i = 0; i < n; ++i) {
    Direction e = Direction::zero(n);
    e.mu[i] = 1;
    s.futaki_vector[i] = futaki(p, e);
  }
  s.eta = extremal(p);
  s.eta_norm_sq = pairing(p, s.eta, s.eta);
  s.m_x = m_x(p, s.eta);
  s.roots = demazure_reductivity(p, s.eta);
  return s;
}

}  // namespace tsol
