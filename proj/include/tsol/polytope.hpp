// Exact rational convex geometry on lattice polytopes of dimension <= 3:
// hull, star triangulation, polynomial integration, vertex optimization.

#pragma once

#include "tsol/affine.hpp"
#include "tsol/errors.hpp"
#include "tsol/rational.hpp"

#include <optional>
#include <vector>

namespace tsol {

// Facet {x : <normal, x> <= offset} with normal a primitive integer vector.
// `loop` indexes the facet's vertices; in 3-D it is the angular boundary walk.
struct Facet {
  RatVec normal;
  Rat offset;
  std::vector<int> loop;
};

struct Simplex {
  std::vector<RatVec> verts;  // n+1 affinely independent points
};

struct Triangulation {
  std::vector<Simplex> simplices;
};

struct HullResult {
  int dim = 0;  // affine dimension of the input
  std::vector<RatVec> vertices;
  std::vector<Facet> facets;
};

// Exact convex hull for ambient dimension 1..3. Vertices come back
// lexicographically sorted, facets sorted by (normal, offset).
HullResult convex_hull(const std::vector<RatVec>& points, int ambient_dim);

// Fan triangulation of a full-dimensional hull from `apex`. The apex may be
// any point of the body (vertex or interior); facets containing it are skipped.
Triangulation fan_triangulation(const HullResult& hull, const RatVec& apex);

Rat simplex_volume(const Simplex& s);

// Exact integral over a simplex of a product of <= 4 affine forms
// (empty product integrates to the volume).
Rat integrate_affine_product(const Simplex& s, const std::vector<AffineForm>& forms);

// Vertex enumeration of {x : <normals[i], x> <= offsets[i]}; returns the
// full-dimensional hull, or nullopt when the region has empty interior.
std::optional<HullResult> intersect_halfspaces(const std::vector<AffineForm>& leq_zero,
                                               int ambient_dim);

class ReflexivePolytope {
 public:
  // Exact hull of the given points. The origin must be interior for the
  // reflexive flag; non-reflexive polytopes are still usable for integration.
  static ReflexivePolytope from_vertices(const std::vector<RatVec>& points);

  int dim() const { return n_; }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Triangulation& triangulation() const { return tri_; }

  bool is_reflexive() const { return reflexive_; }
  bool origin_interior() const { return origin_interior_; }
  void require_reflexive(const char* who) const;

  Rat volume() const { return volume_; }
  RatVec barycenter() const;

  bool contains(const RatVec& x) const;

  // \int_P x^a dx for a multi-index of total degree <= 4.
  Rat integrate_monomial(const std::vector<int>& exponents) const;

  // \int_P f_1 ... f_d dx, d <= 4.
  Rat integrate_affine_product(const std::vector<AffineForm>& forms) const;

  // Maximum of an affine form over P; ties resolve to the lexicographically
  // smallest vertex.
  std::pair<Rat, RatVec> max_affine(const AffineForm& f) const;

  // Lattice points of the dilation kP, in lexicographic order.
  std::vector<std::vector<long>> lattice_points(long k) const;

 private:
  int n_ = 0;
  std::vector<RatVec> vertices_;
  std::vector<Facet> facets_;
  Triangulation tri_;
  bool reflexive_ = false;
  bool origin_interior_ = false;
  Rat volume_ = 0;
  RatVec moment1_;  // \int_P x dx
};

}  // namespace tsol
