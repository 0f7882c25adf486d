#include "tsol/na_energies.hpp"

#include "tsol/lp.hpp"

#include <algorithm>

namespace tsol {

namespace {

// \int over one cell of (active piece) * (optional extra affine factors).
Rat cell_integral(const PLConcave& g, const PLCell& cell,
                  const std::vector<AffineForm>& extra, int piece_power) {
  std::vector<AffineForm> forms;
  for (int r = 0; r < piece_power; ++r) forms.push_back(g.pieces[cell.piece]);
  forms.insert(forms.end(), extra.begin(), extra.end());
  Rat total = 0;
  for (const Simplex& s : cell.tri.simplices) total += integrate_affine_product(s, forms);
  return total;
}

}  // namespace

Direction centered(const ReflexivePolytope& p, const RatVec& mu) {
  Direction d{mu, Rat(0)};
  Rat mean = p.integrate_affine_product({d.hamiltonian()}) / p.volume();
  d.c = -mean;
  return d;
}

bool is_centered(const ReflexivePolytope& p, const Direction& eta) {
  return p.integrate_affine_product({eta.hamiltonian()}) == 0;
}

NAEnergies na_energies(const ReflexivePolytope& p, const PLConcave& g, const Direction& eta) {
  p.require_reflexive("na_energies");
  if (!is_centered(p, eta))
    fail(Errc::degenerate_input, "na_energies: eta is not DH-centered");

  const Rat vol = p.volume();
  AffineForm weight = Direction::identity(p.dim()).hamiltonian();  // 1 + h_eta
  weight.a = weight.a + eta.mu;
  weight.b += eta.c;

  NAEnergies na;
  na.e_na = 0;
  na.e_eta_na = 0;
  for (const PLCell& cell : g.cells) {
    na.e_na += cell_integral(g, cell, {}, 1);
    na.e_eta_na += cell_integral(g, cell, {weight}, 1);
  }
  na.e_na /= vol;
  na.e_eta_na /= vol;

  na.l0_na = g.eval(g.vertex_set.front());
  for (const RatVec& w : g.vertex_set) na.l0_na = std::max(na.l0_na, g.eval(w));

  na.l_na = g.eval(zero_vec(p.dim()));

  na.d_eta_na = na.l_na - na.e_eta_na;
  na.j_na = na.l0_na - na.e_na;
  na.j_eta_na = na.l0_na - na.e_eta_na;
  return na;
}

std::vector<Rat> dh_pushforward_moments(const ReflexivePolytope& p, const PLConcave& g,
                                        int order) {
  if (order > 4) fail(Errc::degree_unsupported, "dh_pushforward_moments: order > 4");
  std::vector<Rat> moments;
  for (int q = 0; q <= order; ++q) {
    Rat total = 0;
    for (const PLCell& cell : g.cells) total += cell_integral(g, cell, {}, q);
    moments.push_back(total / p.volume());
  }
  return moments;
}

JtResult jt_min(const ReflexivePolytope& p, const PLConcave& g, const Direction& eta,
                JtMode mode) {
  p.require_reflexive("jt_min");
  const int n = p.dim();
  const Rat vol = p.volume();
  NAEnergies na = na_energies(p, g, eta);

  // Objective over twists mu: max_W (G + <mu, .>) - (base + <mu, w>), where
  // w is the moment vector of the mode's weight. Minimizing it is the LP
  //   min t - <mu, w>  s.t.  t >= G(v) + <v, mu>  for v in W,
  // solved through its dual: max sum y_v G(v), sum y = 1, sum y v = w, y >= 0.
  Rat base = (mode == JtMode::plain) ? na.e_na : na.e_eta_na;
  RatVec w(n);
  for (int i = 0; i < n; ++i) {
    std::vector<AffineForm> forms{coordinate_form(n, i)};
    if (mode == JtMode::eta) {
      AffineForm weight{eta.mu, 1 + eta.c};
      forms.push_back(weight);
    }
    w[i] = p.integrate_affine_product(forms) / vol;
  }

  const auto& verts = g.vertex_set;
  const int cols = static_cast<int>(verts.size());
  std::vector<RatVec> a(n + 1, RatVec(cols));
  RatVec b(n + 1), c(cols);
  for (int j = 0; j < cols; ++j) {
    a[0][j] = 1;
    for (int i = 0; i < n; ++i) a[i + 1][j] = verts[j][i];
    c[j] = g.eval(verts[j]);
  }
  b[0] = 1;
  for (int i = 0; i < n; ++i) b[i + 1] = w[i];

  LpResult lp = solve_lp_standard(a, b, c);
  if (lp.status != LpStatus::optimal)
    fail(Errc::unbounded,
         "jt_min: twist objective unbounded below (weight moment outside P; "
         "check m_x > 0 for mode eta)");

  JtResult res;
  res.value = lp.value - base;
  res.mu_star = Direction::zero(n);
  for (int i = 0; i < n; ++i) res.mu_star.mu[i] = -lp.dual[i + 1];
  Rat t_star = lp.dual[0];

  // Exact optimality audit: primal feasibility plus complementary slackness.
  for (int j = 0; j < cols; ++j) {
    Rat slack = t_star - dot(verts[j], res.mu_star.mu) - c[j];
    if (slack < 0)
      fail(Errc::internal, "jt_min: dual solution violates a constraint");
    if (lp.x[j] > 0) {
      if (slack != 0)
        fail(Errc::internal, "jt_min: complementary slackness violated");
      res.certificate.emplace_back(verts[j], lp.x[j]);
    }
  }
  return res;
}

}  // namespace tsol
