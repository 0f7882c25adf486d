#include "doctest.h"
#include "test_helpers.hpp"

#include "tsol/polytope.hpp"

#include <algorithm>

using namespace tsol;
using namespace tsol_test;

TEST_CASE("interval hull") {
  auto p = ReflexivePolytope::from_vertices({rv({-1}), rv({1})});
  CHECK(p.dim() == 1);
  CHECK(p.vertices() == std::vector<RatVec>{rv({-1}), rv({1})});
  REQUIRE(p.facets().size() == 2);
  CHECK(p.facets()[0].normal == rv({-1}));
  CHECK(p.facets()[0].offset == 1);
  CHECK(p.facets()[1].normal == rv({1}));
  CHECK(p.facets()[1].offset == 1);
  CHECK(p.is_reflexive());
}

TEST_CASE("plane triangle hull and primitive normals") {
  auto p = p2();
  REQUIRE(p.facets().size() == 3);
  bool has_e1 = false, has_e2 = false, has_diag = false;
  for (const Facet& f : p.facets()) {
    CHECK(f.offset == 1);
    if (f.normal == rv({-1, 0})) has_e1 = true;
    if (f.normal == rv({0, -1})) has_e2 = true;
    if (f.normal == rv({1, 1})) has_diag = true;
  }
  CHECK(has_e1);
  CHECK(has_e2);
  CHECK(has_diag);
  CHECK(p.is_reflexive());
  // interior points of the input are not vertices
  auto q = ReflexivePolytope::from_vertices(
      {rv({-1, -1}), rv({2, -1}), rv({-1, 2}), rv({0, 0}), rv({1, -1})});
  CHECK(q.vertices().size() == 3);
}

TEST_CASE("origin on the boundary only flags non-reflexive") {
  auto p = ReflexivePolytope::from_vertices({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  CHECK(!p.is_reflexive());
  CHECK(p.volume() == Rat(1, 2));
  CHECK_THROWS_AS((void)p.require_reflexive("test"), Error);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS((void)ReflexivePolytope::from_vertices({rv({0, 0}), rv({1, 1}), rv({2, 2})}),
                  Error);
}

TEST_CASE("monomial integration examples") {
  CHECK(p1().integrate_monomial({}) == 2);
  CHECK(p2().integrate_monomial({}) == Rat(9, 2));
  CHECK(p1().integrate_monomial({2}) == Rat(2, 3));
  CHECK_THROWS_AS((void)p1().integrate_monomial({5}), Error);
}

TEST_CASE("second moments of the blown-up plane match hand values") {
  auto p = bl1p2();
  CHECK(p.volume() == 4);
  CHECK(p.barycenter() == rv({0, 0}) + RatVec{Rat(1, 12), Rat(1, 12)});
  CHECK(p.integrate_monomial({2, 0}) == 2);
  CHECK(p.integrate_monomial({1, 1}) == Rat(-4, 3));
}

TEST_CASE("max_affine examples with lexicographic tie-break") {
  auto [v1val, v1arg] = p1().max_affine({rv({1}), Rat(0)});
  CHECK(v1val == 1);
  CHECK(v1arg == rv({1}));

  auto [v2val, v2arg] = p2().max_affine({rv({1, 1}), Rat(0)});
  CHECK(v2val == 1);
  CHECK(v2arg == rv({-1, 2}));  // ties at (2,-1) and (-1,2); lex-smallest wins

  auto [cval, carg] = p2().max_affine({rv({0, 0}), Rat(1)});
  CHECK(cval == 1);
  CHECK(carg == rv({-1, -1}));
}

TEST_CASE("max_affine dominates sampled points and is attained") {
  std::mt19937_64 rng(7);
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    for (int trial = 0; trial < 25; ++trial) {
      AffineForm f{random_rat_vec(rng, p.dim()), random_rat(rng)};
      auto [val, arg] = p.max_affine(f);
      CHECK(f(arg) == val);
      for (int s = 0; s < 8; ++s) {
        RatVec x = random_point_in(p, rng);
        CHECK(f(x) <= val);
      }
    }
  }
}

TEST_CASE("integration agrees with the divergence-theorem oracle") {
  std::mt19937_64 rng(11);
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    for (int d = 0; d <= 4; ++d) {
      for (int trial = 0; trial < 6; ++trial) {
        RatVec a = random_rat_vec(rng, p.dim());
        if (is_zero(a)) a[0] = 1;
        AffineForm linear{a, Rat(0)};
        std::vector<AffineForm> forms(d, linear);
        CHECK(p.integrate_affine_product(forms) == divergence_integral_pow(p, linear, d));
      }
    }
  }
}

TEST_CASE("triangulation volumes add up") {
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    Rat total = 0;
    for (const Simplex& s : p.triangulation().simplices) {
      CHECK(s.verts.front() == zero_vec(p.dim()));  // star from the origin
      total += simplex_volume(s);
    }
    CHECK(total == p.volume());
  }
}

TEST_CASE("volume and barycenter are unimodular-invariant") {
  std::mt19937_64 rng(23);
  std::vector<std::vector<long>> maps = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, -1, 1, 0},
                                         {2, 1, 1, 1}, {1, -2, 0, 1}};
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    if (p.dim() != 2) continue;
    for (const auto& m : maps) {
      std::vector<RatVec> mapped;
      for (const RatVec& v : p.vertices())
        mapped.push_back({Rat(m[0]) * v[0] + Rat(m[1]) * v[1],
                          Rat(m[2]) * v[0] + Rat(m[3]) * v[1]});
      auto q = ReflexivePolytope::from_vertices(mapped);
      CHECK(q.volume() == p.volume());
      RatVec b = p.barycenter();
      RatVec expect = {Rat(m[0]) * b[0] + Rat(m[1]) * b[1], Rat(m[2]) * b[0] + Rat(m[3]) * b[1]};
      CHECK(q.barycenter() == expect);
    }
  }
}

TEST_CASE("H-rep and V-rep describe the same set") {
  for (const CatalogEntry& e : catalog()) {
    auto p = catalog_polytope(e.name);
    // every vertex saturates >= n facets; each facet is saturated by >= n vertices
    for (const RatVec& v : p.vertices()) {
      int sat = 0;
      for (const Facet& f : p.facets()) {
        CHECK(dot(f.normal, v) <= f.offset);
        if (dot(f.normal, v) == f.offset) ++sat;
      }
      CHECK(sat >= p.dim());
    }
    for (const Facet& f : p.facets()) CHECK(static_cast<int>(f.loop.size()) >= p.dim());
    // round trip through the H-rep: vertices of cells rebuild the polytope
    std::vector<AffineForm> halfspaces;
    for (const Facet& f : p.facets()) halfspaces.push_back({f.normal, -f.offset});
    auto hull = intersect_halfspaces(halfspaces, p.dim());
    REQUIRE(hull.has_value());
    CHECK(hull->vertices == p.vertices());
  }
}

TEST_CASE("three-dimensional bodies integrate exactly") {
  // cube = anticanonical polytope of the triple product of lines
  std::vector<RatVec> cube;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) cube.push_back(rv({a, b, c}));
  auto p = ReflexivePolytope::from_vertices(cube);
  CHECK(p.is_reflexive());
  CHECK(p.volume() == 8);
  CHECK(p.barycenter() == rv({0, 0, 0}));
  CHECK(p.integrate_monomial({2, 0, 0}) == Rat(8, 3));
  CHECK(p.integrate_monomial({2, 2, 0}) == Rat(8, 9));
  CHECK(p.integrate_monomial({1, 1, 0}) == 0);

  // anticanonical simplex of projective three-space
  auto s = ReflexivePolytope::from_vertices(
      {rv({-1, -1, -1}), rv({3, -1, -1}), rv({-1, 3, -1}), rv({-1, -1, 3})});
  CHECK(s.is_reflexive());
  CHECK(s.volume() == Rat(32, 3));
  CHECK(s.barycenter() == rv({0, 0, 0}));
  CHECK(s.facets().size() == 4);
}

TEST_CASE("lattice point counts match closed forms") {
  CHECK(p1().lattice_points(3).size() == 7);
  // h^0 of the k-th anticanonical power on the plane: (3k+1)(3k+2)/2
  for (long k : {1L, 2L, 5L}) {
    CHECK(p2().lattice_points(k).size() ==
          static_cast<std::size_t>((3 * k + 1) * (3 * k + 2) / 2));
  }
}
