// Acceptance suite: one line per criterion, failure exits nonzero.
//
// 1 exact plane pipeline          (< 1 s)
// 2 blown-up plane dichotomy      (< 5 s)
// 3 weight-oracle equivalence     (< 60 s)
// 4 extremal identity suite       (exact)
// 5 slope formulas at desk scale  (< 10 min)
// 6 soliton existence cross-check (< 30 min)
// 7 property suites, 10000 cases  (< 5 min)

#include "tsol/catalog.hpp"
#include "tsol/flow.hpp"
#include "tsol/invariants.hpp"
#include "tsol/json_io.hpp"
#include "tsol/slope.hpp"
#include "tsol/stability.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace tsol;

namespace {

int failures = 0;
long property_cases = 0;

struct Criterion {
  std::string name;
  double limit_seconds;
  bool ok = true;
  std::vector<std::string> notes;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void finish() {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= limit_seconds) {
      ok = false;
      notes.push_back("runtime " + std::to_string(secs) + "s exceeds limit");
    }
    std::printf("%s criterion %s (%.2f s / limit %.0f s)\n", ok ? "PASS" : "FAIL", name.c_str(),
                secs, limit_seconds);
    for (const std::string& n : notes) std::printf("      - %s\n", n.c_str());
    if (!ok) ++failures;
  }
};

Direction basis_dir(int n, int i) {
  Direction d = Direction::zero(n);
  d.mu[i] = 1;
  return d;
}

Rat random_rat(std::mt19937_64& rng, long span, long dmax) {
  std::uniform_int_distribution<long> den(1, dmax);
  long d = den(rng);
  std::uniform_int_distribution<long> num(-span * d, span * d);
  return Rat(num(rng), d);
}

RatVec random_vec(std::mt19937_64& rng, int n, long span, long dmax) {
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = random_rat(rng, span, dmax);
  return v;
}

PLConcave random_concave(const ReflexivePolytope& p, std::mt19937_64& rng, long dmax = 2,
                         int max_creases = 3) {
  std::uniform_int_distribution<int> ncre(1, max_creases);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<AffineForm> data;
  int m = ncre(rng);
  for (int i = 0; i < m; ++i) data.push_back({random_vec(rng, p.dim(), 2, 1), random_rat(rng, 2, dmax)});
  return from_creases(p, data, coin(rng) == 1);
}

void criterion1() {
  Criterion c{"1 (plane pipeline)", 1.0};
  auto p = catalog_polytope("P2");
  InvariantsSummary inv = invariants_summary(p);
  c.expect(inv.barycenter == RatVec{Rat(0), Rat(0)}, "barycenter != 0");
  c.expect(inv.futaki_vector == RatVec{Rat(0), Rat(0)}, "futaki vector != 0");
  c.expect(inv.eta.is_zero(), "eta != 0");
  c.expect(inv.m_x == 1, "m_X != 1");
  c.expect(inv.roots.reductive, "not reductive");
  StabilityReport rep = analyze(p, "P2", full_family(p));
  c.expect(rep.verdict == Verdict::stable_on_family, "verdict is not stable_on_family");
  c.expect(rep.has_uniform_epsilon && rep.uniform_epsilon > 0, "min ratio not positive");
  c.finish();
}

void criterion2() {
  Criterion c{"2 (blow-up dichotomy)", 5.0};
  auto p = catalog_polytope("BL1P2");
  PLConcave cone = bl1p2_exceptional_normal_cone(p);
  NAEnergies na0 = na_energies(p, cone, Direction::zero(2));
  c.expect(na0.d_eta_na < 0, "D^NA not negative with eta = 0");
  c.expect(na0.d_eta_na == Rat(-1, 6), "D^NA != -1/6 exactly");

  Direction eta = extremal(p);
  NAEnergies nae = na_energies(p, cone, eta);
  c.expect(nae.d_eta_na == 0, "D_eta^NA != 0 at the extremal direction");
  JtResult jt = jt_min(p, cone, eta, JtMode::eta);
  c.expect(jt.value == 0, "jt_min value != 0");
  c.expect(!jt.mu_star.mu.empty() && denominator(jt.mu_star.mu[0]) >= 1,
           "mu* not rational");
  c.expect(jt.mu_star.mu == RatVec{Rat(-1), Rat(-1)}, "mu* != (-1,-1)");

  StabilityReport forced = analyze(p, "BL1P2", normal_cone_family(p), Direction::zero(2));
  c.expect(forced.verdict == Verdict::destabilized, "eta = 0 verdict not destabilized");
  c.finish();
}

void criterion3() {
  Criterion c{"3 (weight-oracle equivalence)", 60.0};
  const std::vector<long> ks = {6, 12, 24, 48};
  for (const char* name : {"P2", "P1xP1", "BL1P2", "BL2P2", "BL3P2"}) {
    auto p = catalog_polytope(name);
    std::mt19937_64 rng(1234);
    int tested = 0;
    double worst_order = 10;
    while (tested < 20) {
      PLConcave g = random_concave(p, rng);
      long k0 = stabilizing_k(g);
      if (k0 > 48) continue;  // keep a divisible dilation within reach
      ++tested;
      NAEnergies na = na_energies(p, g, extremal(p));
      double logsum_x = 0, logsum_y = 0, logsum_xx = 0, logsum_xy = 0;
      int pts = 0;
      bool all_exact = true;
      for (long k : ks) {
        WeightSample s = weight_oracle(p, g, Direction::identity(p.dim()), k);
        Rat err = abs(s.lambda_mean - na.e_na);
        if (err > 0) {
          all_exact = false;
          double le = std::log(to_double(err)), lk = std::log(static_cast<double>(k));
          logsum_x += lk;
          logsum_y += le;
          logsum_xx += lk * lk;
          logsum_xy += lk * le;
          ++pts;
        }
        if (k % k0 == 0) {
          if (s.lambda_max != na.l0_na) {
            c.expect(false, std::string(name) + ": weight max != L0 at divisible k");
            break;
          }
        }
      }
      if (!all_exact && pts >= 2) {
        double slope = (pts * logsum_xy - logsum_x * logsum_y) /
                       (pts * logsum_xx - logsum_x * logsum_x);
        worst_order = std::min(worst_order, -slope);
      }
    }
    c.expect(worst_order >= 0.9,
             std::string(name) + ": empirical order " + std::to_string(worst_order) + " < 0.9");
  }
  c.finish();
}

void criterion4() {
  Criterion c{"4 (extremal identities)", 30.0};
  std::mt19937_64 rng(77);
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    Direction eta = extremal(p);
    const int n = p.dim();
    for (int i = 0; i < n; ++i)
      c.expect(futaki(p, basis_dir(n, i)) == pairing(p, basis_dir(n, i), eta),
               e.name + ": basis identity fails");
    c.expect(futaki(p, Direction::identity(n)) == pairing(p, Direction::identity(n), eta),
             e.name + ": identity component fails");
    for (int t = 0; t < 100; ++t) {
      Direction mu{random_vec(rng, n, 3, 4), random_rat(rng, 3, 4)};
      if (futaki(p, mu) != pairing(p, mu, eta)) {
        c.expect(false, e.name + ": random identity fails");
        break;
      }
    }
    c.expect(pairing(p, Direction::identity(n), eta) == 0, e.name + ": centering fails");
  }
  c.finish();
}

void criterion5() {
  Criterion c{"5 (slope formulas)", 600.0};
  struct Case {
    const char* name;
    int nodes;
  };
  for (const Case& cs : {Case{"P1", 257}, Case{"P1xP1", 193}, Case{"BL1P2", 193}}) {
    auto p = catalog_polytope(cs.name);
    Direction eta = extremal(p);
    std::vector<Direction> mus;
    for (int i = 0; i < p.dim(); ++i) mus.push_back(basis_dir(p.dim(), i));
    if (!eta.is_zero()) mus.push_back(eta);
    for (const Direction& mu : mus) {
      SlopeOptions opt;
      opt.t_max = 40;
      opt.nodes = cs.nodes;
      opt.box_halfwidth = 8;
      auto rows = slope_check(p, mu, eta, opt);
      for (const SlopeRow& r : rows) {
        if (r.functional == "L" || r.functional == "J_T") continue;
        bool ok = r.gap_rel <= 0.02 || r.gap_abs <= 1e-2;
        if (!ok)
          c.expect(false, std::string(cs.name) + " " + r.functional + ": slope " +
                              std::to_string(r.slope) + " vs " + std::to_string(r.na_value));
      }
    }
  }
  c.finish();
}

void criterion6() {
  Criterion c{"6 (soliton existence cross-check)", 1800.0};
  auto p = catalog_polytope("BL1P2");
  NumericModel model = numeric_model(p);
  Direction eta = extremal(p);
  DirectionD etad = DirectionD::from(eta);

  FlowParams prm;
  prm.dt = 0.4;
  prm.tol = 5e-3;
  prm.max_steps = 60000;
  prm.trace_every = 200;
  FlowResult res = flow_cascade(p, model, {65, 129, 257}, 8.0, etad, prm);
  c.expect(res.converged, "flow did not reach the residual tolerance");
  c.expect(res.residual < 5e-3, "residual " + std::to_string(res.residual));

  double target = to_double(futaki(p, eta)) / std::sqrt(to_double(pairing(p, eta, eta)));
  double achieved = std::sqrt(res.trace.back().r);
  c.expect(std::abs(achieved - target) / target <= 0.02,
           "sqrt(R) = " + std::to_string(achieved) + " vs F(eta)/|eta| = " +
               std::to_string(target));

  // the unweighted flow must keep descending without stabilizing
  FlowParams prm0;
  prm0.dt = 0.4;
  prm0.tol = 5e-3;
  prm0.max_steps = 2500;
  prm0.trace_every = 100;
  DirectionD zero;
  zero.mu = {0.0, 0.0};
  FlowResult res0 = flow_run(model, make_potential(p, 257, 8.0), zero, prm0);
  c.expect(!res0.converged, "eta = 0 flow converged unexpectedly");
  const auto& tr = res0.trace;
  c.expect(tr.size() >= 4, "trace too short");
  if (tr.size() >= 4) {
    double d_first = tr.front().d_eta, d_last = tr.back().d_eta;
    c.expect(d_last < d_first - 0.05, "D did not decrease substantially");
    // still descending at the end: last interval drops at a bounded rate
    double tail = tr[tr.size() - 2].d_eta - d_last;
    double dt_tail = tr.back().t - tr[tr.size() - 2].t;
    c.expect(tail > 0.25 * to_double(pairing(p, eta, eta)) * dt_tail,
             "descent stalled although no soliton exists for eta = 0");
  }
  c.finish();
}

void criterion7() {
  Criterion c{"7 (property suites)", 300.0};
  std::mt19937_64 rng(2026);

  // Gram positive definiteness
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    for (int t = 0; t < 400; ++t) {
      Direction xi{random_vec(rng, p.dim(), 3, 4), random_rat(rng, 3, 4)};
      if (xi.is_zero()) continue;
      ++property_cases;
      if (!(pairing(p, xi, xi) > 0)) {
        c.expect(false, e.name + ": Gram not positive definite");
        break;
      }
    }
  }

  // twist additivity + translation equivariance + J_eta >= 0
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    Direction eta = extremal(p);
    Rat vol = p.volume();
    for (int t = 0; t < 150; ++t) {
      PLConcave g = random_concave(p, rng);
      Direction mu{random_vec(rng, p.dim(), 2, 2), random_rat(rng, 2, 2)};
      NAEnergies before = na_energies(p, g, eta);
      NAEnergies after = na_energies(p, twist(g, mu), eta);
      Rat mean_mu = p.integrate_affine_product({mu.hamiltonian()}) / vol;
      Rat mean_mu_eta =
          p.integrate_affine_product({mu.hamiltonian(), {eta.mu, 1 + eta.c}}) / vol;
      ++property_cases;
      if (after.e_na != before.e_na + mean_mu ||
          after.e_eta_na != before.e_eta_na + mean_mu_eta) {
        c.expect(false, e.name + ": twist additivity fails");
        break;
      }
      Rat shift = random_rat(rng, 2, 3);
      NAEnergies moved = na_energies(p, twist(g, Direction{zero_vec(p.dim()), shift}), eta);
      ++property_cases;
      if (moved.l_na != before.l_na + shift || moved.d_eta_na != before.d_eta_na) {
        c.expect(false, e.name + ": translation equivariance fails");
        break;
      }
      bool constant = g.is_single_piece() && is_zero(g.pieces[0].a);
      ++property_cases;
      if ((constant && before.j_eta_na != 0) || (!constant && !(before.j_eta_na > 0))) {
        c.expect(false, e.name + ": J_eta positivity fails");
        break;
      }
    }
  }

  // LP subgradient certificates (jt_min audits complementary slackness
  // internally; verify the convex decomposition independently here)
  for (const char* name : {"P2", "BL1P2", "BL2P2"}) {
    auto p = catalog_polytope(name);
    Direction eta = extremal(p);
    for (int t = 0; t < 120; ++t) {
      PLConcave g = random_concave(p, rng);
      for (JtMode mode : {JtMode::plain, JtMode::eta}) {
        JtResult jt = jt_min(p, g, eta, mode);
        Rat wsum = 0;
        RatVec wvec = zero_vec(p.dim());
        for (const auto& [v, w] : jt.certificate) {
          wsum += w;
          wvec = wvec + w * v;
        }
        RatVec expect(p.dim());
        for (int i = 0; i < p.dim(); ++i) {
          std::vector<AffineForm> forms{coordinate_form(p.dim(), i)};
          if (mode == JtMode::eta) forms.push_back({eta.mu, 1 + eta.c});
          expect[i] = p.integrate_affine_product(forms) / p.volume();
        }
        ++property_cases;
        if (wsum != 1 || wvec != expect) {
          c.expect(false, std::string(name) + ": certificate decomposition fails");
          break;
        }
      }
    }
  }

  // flow monotonicity of D_eta and R (1-D, traced every accepted step)
  {
    auto p = catalog_polytope("P1");
    NumericModel model = numeric_model(p);
    DirectionD eta0;
    eta0.mu = {0.0};
    for (double bump : {0.15, 0.3}) {
      ConvexPotential start = make_potential(p, 257, 8);
      for (int i = 0; i < start.grid.m; ++i) {
        double x = start.grid.coord(i);
        start.u[i] += bump * std::exp(-0.5 * x * x) + 0.05 * bump * std::tanh(x);
      }
      FlowParams prm;
      prm.dt = 0.25;
      prm.tol = 5e-4;
      prm.max_steps = 20000;
      prm.trace_every = 1;
      FlowResult res = flow_run(model, start, eta0, prm);
      c.expect(res.converged, "1-D property flow did not converge");
      for (std::size_t i = 1; i < res.trace.size(); ++i) {
        ++property_cases;
        if (res.trace[i].d_eta > res.trace[i - 1].d_eta + 1e-9 ||
            res.trace[i].r > res.trace[i - 1].r + 1e-9) {
          c.expect(false, "flow monotonicity violated");
          break;
        }
      }
    }
  }

  // M_eta >= D_eta across random evaluated potentials
  {
    auto p = catalog_polytope("BL1P2");
    NumericModel model = numeric_model(p);
    DirectionD eta = DirectionD::from(extremal(p));
    std::mt19937_64 nrng(5);
    std::uniform_real_distribution<double> amp(-0.2, 0.2);
    for (int t = 0; t < 60; ++t) {
      ConvexPotential psi = make_potential(p, 65, 8);
      double a1 = amp(nrng), a2 = amp(nrng), a3 = amp(nrng);
      for (int i = 0; i < psi.grid.m; ++i)
        for (int j = 0; j < psi.grid.m; ++j) {
          double x = psi.grid.coord(i), y = psi.grid.coord(j);
          psi.u[psi.grid.at(i, j)] +=
              a1 * std::exp(-0.3 * (x * x + y * y)) + a2 * std::tanh(0.5 * x) +
              a3 * std::tanh(0.5 * y);
        }
      if (!discretely_convex(psi, 1e-10)) continue;
      Diagnostics d = functionals(model, psi, eta);
      ++property_cases;
      if (!(d.m_eta >= d.d_eta - 1e-12)) {
        c.expect(false, "M_eta >= D_eta fails");
        break;
      }
    }
  }

  char buf[64];
  std::snprintf(buf, sizeof buf, "%ld generated cases", property_cases);
  c.notes.push_back(buf);
  c.expect(property_cases >= 10000, "fewer than 10000 generated cases");
  c.finish();
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
