#include "doctest.h"
#include "test_helpers.hpp"

#include "tsol/catalog.hpp"
#include "tsol/invariants.hpp"
#include "tsol/na_energies.hpp"

#include <random>

using namespace tsol;
using namespace tsol_test;

namespace {

PLConcave random_concave(const ReflexivePolytope& p, std::mt19937_64& rng, int max_creases = 3) {
  std::uniform_int_distribution<int> ncre(1, max_creases);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<AffineForm> data;
  int m = ncre(rng);
  for (int i = 0; i < m; ++i) {
    RatVec a = random_rat_vec(rng, p.dim(), 2, 2);
    data.push_back({a, random_rat(rng, 2, 2)});
  }
  return from_creases(p, data, coin(rng) == 1);
}

}  // namespace

TEST_CASE("product configurations") {
  auto p = p1();
  PLConcave trivial = product_config(p, Direction::zero(1));
  CHECK(trivial.is_trivial());
  CHECK(trivial.eval(rv({1})) == 0);

  PLConcave gx = product_config(p, Direction{rv({1}), Rat(0)});
  CHECK(gx.eval(RatVec{Rat(1, 2)}) == Rat(1, 2));

  PLConcave gshift = product_config(p, Direction{rv({1}), Rat(1)});
  NAEnergies na = na_energies(p, gshift, Direction::zero(1));
  CHECK(na.l0_na == 2);
}

TEST_CASE("twist is a group action matching products") {
  auto p = p2();
  Direction mu{rv({1, -1}), Rat(1, 2)};
  PLConcave trivial = product_config(p, Direction::zero(2));
  CHECK(twist(trivial, mu).pieces == product_config(p, mu).pieces);

  std::mt19937_64 rng(5);
  PLConcave g = random_concave(p, rng);
  PLConcave back = twist(twist(g, mu), -mu);
  CHECK(back.pieces == g.pieces);
}

TEST_CASE("from_creases single crease on the interval") {
  auto p = p1();
  PLConcave g = from_creases(p, {{rv({-1}), Rat(0)}}, true);
  CHECK(g.pieces.size() == 2);
  CHECK(g.eval(RatVec{Rat(1, 2)}) == Rat(-1, 2));
  CHECK(g.eval(RatVec{Rat(-1, 2)}) == 0);
  NAEnergies na = na_energies(p, g, Direction::zero(1));
  CHECK(na.e_na == Rat(-1, 4));
}

TEST_CASE("fully dominated creases collapse to the single dominating piece") {
  auto p = p1();
  PLConcave g = from_creases(p, {{rv({1}), Rat(-10)}}, true);
  CHECK(g.is_single_piece());
  CHECK(g.pieces[0].a == rv({1}));

  // two creases, one of them everywhere above the other
  PLConcave h = from_creases(p2(), {{rv({1, 0}), Rat(-5)}, {rv({1, 0}), Rat(-7)}}, false);
  CHECK(h.is_single_piece());
  CHECK(h.pieces[0].b == -7);
}

TEST_CASE("na_energies of the trivial configuration vanish") {
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    Direction eta = extremal(p);
    NAEnergies na = na_energies(p, product_config(p, Direction::zero(p.dim())), eta);
    CHECK(na.e_na == 0);
    CHECK(na.l0_na == 0);
    CHECK(na.l_na == 0);
    CHECK(na.e_eta_na == 0);
    CHECK(na.d_eta_na == 0);
    CHECK(na.j_na == 0);
    CHECK(na.j_eta_na == 0);
  }
}

TEST_CASE("products reproduce the futaki pairing identity") {
  std::mt19937_64 rng(13);
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    Direction eta = extremal(p);
    for (int t = 0; t < 20; ++t) {
      Direction mu{random_rat_vec(rng, p.dim()), random_rat(rng)};
      NAEnergies na = na_energies(p, product_config(p, mu), eta);
      CHECK(na.d_eta_na == futaki(p, mu) - pairing(p, mu, eta));
      CHECK(na.d_eta_na == 0);  // eta is extremal
    }
  }
}

TEST_CASE("blown-up plane normal cone: the dichotomy values") {
  auto p = bl1p2();
  PLConcave cone = bl1p2_exceptional_normal_cone(p);

  // with eta = 0 the configuration destabilizes
  NAEnergies na0 = na_energies(p, cone, Direction::zero(2));
  CHECK(na0.l_na == -1);
  CHECK(na0.e_na == Rat(-5, 6));
  CHECK(na0.d_eta_na == Rat(-1, 6));

  // with the extremal direction both invariants vanish exactly
  Direction eta = extremal(p);
  NAEnergies nae = na_energies(p, cone, eta);
  CHECK(nae.d_eta_na == 0);
  JtResult jt = jt_min(p, cone, eta, JtMode::eta);
  CHECK(jt.value == 0);
  CHECK(!jt.mu_star.mu.empty());
  CHECK(jt.mu_star.mu == RatVec{Rat(-1), Rat(-1)});
}

TEST_CASE("jt_min examples") {
  auto p = p2();
  Direction eta = extremal(p);

  JtResult trivial = jt_min(p, product_config(p, Direction::zero(2)), eta, JtMode::plain);
  CHECK(trivial.value == 0);
  CHECK(is_zero(trivial.mu_star.mu));

  Direction nu{rv({2, -1}), Rat(0)};
  JtResult prod = jt_min(p, product_config(p, nu), eta, JtMode::plain);
  CHECK(prod.value == 0);
  CHECK(prod.mu_star.mu == -nu.mu);
}

TEST_CASE("jt certificate weights form an exact convex decomposition") {
  std::mt19937_64 rng(17);
  for (const char* name : {"P2", "BL1P2"}) {
    auto p = catalog_polytope(name);
    Direction eta = extremal(p);
    for (int t = 0; t < 10; ++t) {
      PLConcave g = random_concave(p, rng);
      for (JtMode mode : {JtMode::plain, JtMode::eta}) {
        JtResult jt = jt_min(p, g, eta, mode);
        Rat wsum = 0;
        RatVec wvec = zero_vec(p.dim());
        for (const auto& [v, w] : jt.certificate) {
          CHECK(w > 0);
          wsum += w;
          wvec = wvec + w * v;
        }
        CHECK(wsum == 1);
        // the weighted moment of the mode
        RatVec expect(p.dim());
        for (int i = 0; i < p.dim(); ++i) {
          std::vector<AffineForm> forms{coordinate_form(p.dim(), i)};
          if (mode == JtMode::eta) forms.push_back({eta.mu, 1 + eta.c});
          expect[i] = p.integrate_affine_product(forms) / p.volume();
        }
        CHECK(wvec == expect);
      }
    }
  }
}

TEST_CASE("jt value is twist-invariant and the shifted minimizer stays optimal") {
  std::mt19937_64 rng(19);
  auto p = bl1p2();
  Direction eta = extremal(p);
  for (int t = 0; t < 10; ++t) {
    PLConcave g = random_concave(p, rng);
    Direction nu{random_rat_vec(rng, 2, 2, 2), Rat(0)};
    JtResult base = jt_min(p, g, eta, JtMode::eta);
    JtResult shifted = jt_min(p, twist(g, nu), eta, JtMode::eta);
    CHECK(shifted.value == base.value);
    // base minimizer, shifted by -nu, still attains the optimum
    Direction transported{base.mu_star.mu - nu.mu, Rat(0)};
    NAEnergies at = na_energies(p, twist(twist(g, nu), transported), eta);
    CHECK(at.j_eta_na == base.value);
  }
}

TEST_CASE("jt_min reports unbounded objectives for invalid weights") {
  auto p = bl1p2();
  // exaggerate the extremal direction so 1 + h is negative on part of P
  Direction bad = centered(p, rv({-6, -6}));
  CHECK(m_x(p, bad) < 0);
  std::mt19937_64 rng(23);
  PLConcave g = random_concave(p, rng);
  CHECK_THROWS_AS((void)jt_min(p, g, bad, JtMode::eta), Error);
}

TEST_CASE("twist additivity of the energies") {
  std::mt19937_64 rng(29);
  for (const char* name : {"P1", "P2", "BL1P2", "BL2P2"}) {
    auto p = catalog_polytope(name);
    Direction eta = extremal(p);
    for (int t = 0; t < 15; ++t) {
      PLConcave g = random_concave(p, rng);
      Direction mu{random_rat_vec(rng, p.dim()), random_rat(rng)};
      NAEnergies before = na_energies(p, g, eta);
      NAEnergies after = na_energies(p, twist(g, mu), eta);
      Rat mean_mu = p.integrate_affine_product({mu.hamiltonian()}) / p.volume();
      CHECK(after.e_na == before.e_na + mean_mu);
      Rat mean_mu_eta =
          p.integrate_affine_product({mu.hamiltonian(), {eta.mu, 1 + eta.c}}) / p.volume();
      CHECK(after.e_eta_na == before.e_eta_na + mean_mu_eta);
    }
  }
}

TEST_CASE("translation equivariance of the Ding term") {
  std::mt19937_64 rng(31);
  auto p = bl1p2();
  Direction eta = extremal(p);
  for (int t = 0; t < 20; ++t) {
    PLConcave g = random_concave(p, rng);
    Rat c = random_rat(rng);
    Direction shift{zero_vec(2), c};
    NAEnergies before = na_energies(p, g, eta);
    NAEnergies after = na_energies(p, twist(g, shift), eta);
    CHECK(after.l_na == before.l_na + c);
    CHECK(after.d_eta_na == before.d_eta_na);
    CHECK(after.j_eta_na == before.j_eta_na);
    CHECK(after.j_na == before.j_na);
  }
}

TEST_CASE("j_eta positivity under m_x > 0") {
  std::mt19937_64 rng(37);
  for (const char* name : {"P1", "P2", "P1xP1", "BL1P2", "BL2P2", "BL3P2"}) {
    auto p = catalog_polytope(name);
    Direction eta = extremal(p);
    REQUIRE(m_x(p, eta) > 0);
    for (int t = 0; t < 25; ++t) {
      PLConcave g = random_concave(p, rng);
      NAEnergies na = na_energies(p, g, eta);
      bool constant = g.is_single_piece() && is_zero(g.pieces[0].a);
      if (constant)
        CHECK(na.j_eta_na == 0);
      else
        CHECK(na.j_eta_na > 0);
    }
  }
}

TEST_CASE("weighted and plain J sandwich each other by the range of the weight") {
  // With g = 1 + h_eta of mean one: (min g) J <= J_eta <= (max g) J.
  std::mt19937_64 rng(41);
  for (const char* name : {"BL1P2", "BL2P2"}) {
    auto p = catalog_polytope(name);
    Direction eta = extremal(p);
    Rat gmax = p.max_affine({eta.mu, 1 + eta.c}).first;
    Rat gmin = -p.max_affine({-eta.mu, -1 - eta.c}).first;
    CHECK(gmin == m_x(p, eta));
    for (int t = 0; t < 20; ++t) {
      PLConcave g = random_concave(p, rng);
      NAEnergies na = na_energies(p, g, eta);
      CHECK(gmin * na.j_na <= na.j_eta_na);
      CHECK(na.j_eta_na <= gmax * na.j_na);
    }
  }
}

TEST_CASE("dh pushforward moments") {
  auto p = p1();
  auto trivial_moments = dh_pushforward_moments(p, product_config(p, Direction::zero(1)), 4);
  CHECK(trivial_moments == std::vector<Rat>{1, 0, 0, 0, 0});

  auto id_moments = dh_pushforward_moments(p, product_config(p, Direction{rv({1}), Rat(0)}), 4);
  CHECK(id_moments == std::vector<Rat>{1, 0, Rat(1, 3), 0, Rat(1, 5)});

  PLConcave kink = from_creases(p, {{rv({-1}), Rat(0)}}, true);
  auto m = dh_pushforward_moments(p, kink, 2);
  CHECK(m[1] == Rat(-1, 4));
  CHECK(m[2] == Rat(1, 6));

  CHECK_THROWS_AS((void)dh_pushforward_moments(p, kink, 5), Error);
}
