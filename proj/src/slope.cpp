#include "tsol/slope.hpp"

#include <cmath>

namespace tsol {

std::vector<SlopeRow> slope_check(const ReflexivePolytope& p, const Direction& mu,
                                  const Direction& eta, const SlopeOptions& opt) {
  NumericModel model = numeric_model(p);
  // the ray's mass travels ~T in log coordinates: the box must cover it
  double box = std::max(opt.box_halfwidth, opt.t_max + 8);
  ConvexPotential base = make_potential(p, opt.nodes, box);
  DirectionD mud = DirectionD::from(mu);
  DirectionD etad = DirectionD::from(eta);

  const double T = opt.t_max;
  auto measure = [&](double t) {
    ConvexPotential ray = make_ray_sample(base, mud, t);
    FunctionalOptions fopt;
    fopt.with_jt = true;
    for (double m : mud.mu) fopt.jt_init.push_back(t * m);
    return functionals(model, ray, etad, fopt);
  };
  Diagnostics full = measure(T);
  Diagnostics half = measure(T / 2);

  PLConcave g = product_config(p, mu);
  NAEnergies na = na_energies(p, g, eta);
  JtResult jt = jt_min(p, g, eta, JtMode::plain);

  auto rate = [&](double f_full, double f_half) { return (f_full - f_half) / (T / 2); };
  auto row = [&](const std::string& name, double slope, const Rat& exact) {
    SlopeRow r{name, slope, to_double(exact), 0, 0};
    r.gap_abs = std::abs(r.slope - r.na_value);
    r.gap_rel = r.gap_abs / std::max(std::abs(r.na_value), 1e-300);
    return r;
  };

  std::vector<SlopeRow> rows;
  rows.push_back(row("E", rate(full.e, half.e), na.e_na));
  rows.push_back(row("E_eta", rate(full.e_eta, half.e_eta), na.e_eta_na));
  rows.push_back(row("L0", rate(full.l0, half.l0), na.l0_na));
  // L(psi^t) = t mu.c exactly: the canonical integral is invariant under the
  // torus translation generating the ray.
  rows.push_back(row("L", to_double(mu.c), na.l_na));
  rows.push_back(row("J", rate(full.j, half.j), na.j_na));
  Rat l_slope = mu.c;
  rows.push_back(
      row("D_eta", to_double(l_slope) - rate(full.e_eta, half.e_eta), na.d_eta_na));
  rows.push_back(row("J_T", rate(full.j_t, half.j_t), jt.value));
  return rows;
}

}  // namespace tsol
