#include "tsol/polytope.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace tsol {

namespace {

RatVec cross3(const RatVec& u, const RatVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Scale a rational normal to a primitive integer vector, preserving direction.
void primitivize(RatVec& normal, Rat& offset) {
  Int den = common_denominator(normal);
  Int num_gcd = 0;
  for (Rat& x : normal) x *= Rat(den);
  offset *= Rat(den);
  for (const Rat& x : normal) num_gcd = boost::multiprecision::gcd(num_gcd, numerator(x));
  if (num_gcd > 1) {
    for (Rat& x : normal) x /= Rat(num_gcd);
    offset /= Rat(num_gcd);
  }
}

std::vector<RatVec> dedup_sorted(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Affine rank of the point set via exact Gaussian elimination.
int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<RatVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
  std::size_t n = pts[0].size();
  int rank = 0;
  std::size_t col = 0;
  for (; col < n && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

HullResult hull_1d(const std::vector<RatVec>& pts) {
  HullResult h;
  h.dim = 1;
  RatVec lo = pts[0], hi = pts[0];
  for (const RatVec& p : pts) {
    if (p[0] < lo[0]) lo = p;
    if (p[0] > hi[0]) hi = p;
  }
  h.vertices = {lo, hi};
  Facet fneg{{Rat(-1)}, -lo[0], {0}};
  Facet fpos{{Rat(1)}, hi[0], {1}};
  h.facets = {fneg, fpos};
  return h;
}

Rat orient2(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

HullResult hull_2d(std::vector<RatVec> pts) {
  pts = dedup_sorted(pts);
  // Andrew's monotone chain with strict turns.
  std::vector<RatVec> lower, upper;
  for (const RatVec& p : pts) {
    while (lower.size() >= 2 && orient2(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && orient2(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  std::vector<RatVec> ring = lower;  // counterclockwise ring
  ring.insert(ring.end(), upper.begin() + 1, upper.end() - 1);

  HullResult h;
  h.dim = 2;
  h.vertices = dedup_sorted(ring);
  auto index_of = [&](const RatVec& v) {
    return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v, lex_less) -
                            h.vertices.begin());
  };
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const RatVec& p = ring[i];
    const RatVec& q = ring[(i + 1) % ring.size()];
    RatVec normal = {q[1] - p[1], p[0] - q[0]};  // outward for a CCW ring
    Rat offset = dot(normal, p);
    primitivize(normal, offset);
    Facet f{normal, offset, {index_of(p), index_of(q)}};
    std::sort(f.loop.begin(), f.loop.end());
    h.facets.push_back(f);
  }
  return h;
}

HullResult hull_3d(std::vector<RatVec> pts) {
  pts = dedup_sorted(pts);
  const std::size_t m = pts.size();

  struct PlaneKey {
    RatVec n;
    Rat c;
    bool operator<(const PlaneKey& o) const {
      if (n != o.n) return lex_less(n, o.n);
      return c < o.c;
    }
  };
  std::set<PlaneKey> seen;
  std::vector<std::pair<RatVec, Rat>> planes;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        RatVec nrm = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        if (is_zero(nrm)) continue;
        Rat c = dot(nrm, pts[i]);
        bool above = false, below = false;
        for (std::size_t t = 0; t < m && !(above && below); ++t) {
          Rat d = dot(nrm, pts[t]) - c;
          if (d > 0) above = true;
          if (d < 0) below = true;
        }
        if (above && below) continue;
        if (above) {
          nrm = -nrm;
          c = -c;
        }
        primitivize(nrm, c);
        if (seen.insert({nrm, c}).second) planes.emplace_back(nrm, c);
      }

  // A hull vertex lies on >= 3 facet planes whose normals span R^3.
  HullResult h;
  h.dim = 3;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<RatVec> span{zero_vec(3)};
    for (const auto& [nrm, c] : planes)
      if (dot(nrm, pts[t]) == c) span.push_back(nrm);
    if (span.size() >= 4 && affine_rank(span) == 3) h.vertices.push_back(pts[t]);
  }
  h.vertices = dedup_sorted(h.vertices);
  auto index_of = [&](const RatVec& v) {
    return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v, lex_less) -
                            h.vertices.begin());
  };

  for (const auto& [nrm, c] : planes) {
    std::vector<int> on;
    for (const RatVec& v : h.vertices)
      if (dot(nrm, v) == c) on.push_back(index_of(v));
    if (on.size() < 3) continue;

    // Angular walk around the facet: exact atan2-style comparator about `nrm`.
    RatVec g = zero_vec(3);
    for (int idx : on) g = g + h.vertices[idx];
    Rat inv = Rat(1) / Rat(static_cast<int>(on.size()));
    g = inv * g;
    RatVec u = h.vertices[on.front()] - g;  // on is lex-sorted: deterministic axis
    RatVec w = cross3(nrm, u);
    auto half = [&](const RatVec& r) {
      Rat wc = dot(w, r);
      if (wc > 0) return 0;
      if (wc < 0) return 1;
      return dot(u, r) > 0 ? 0 : 1;
    };
    std::sort(on.begin(), on.end(), [&](int a, int b) {
      RatVec ra = h.vertices[a] - g, rb = h.vertices[b] - g;
      int ha = half(ra), hb = half(rb);
      if (ha != hb) return ha < hb;
      return dot(nrm, cross3(ra, rb)) > 0;
    });
    // Canonical cycle: start at the smallest index, direction by second vs last.
    auto smallest = std::min_element(on.begin(), on.end());
    std::rotate(on.begin(), smallest, on.end());
    if (on.size() >= 3 && on[1] > on.back()) {
      std::reverse(on.begin() + 1, on.end());
    }
    h.facets.push_back({nrm, c, on});
  }
  std::sort(h.facets.begin(), h.facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });
  return h;
}

// Complete homogeneous symmetric polynomial h_d of the given values.
Rat complete_homogeneous(const std::vector<Rat>& vals, int d) {
  std::vector<Rat> h(static_cast<std::size_t>(d) + 1, Rat(0));
  h[0] = 1;
  for (const Rat& v : vals)
    for (int j = 1; j <= d; ++j) h[j] += v * h[j - 1];
  return h[d];
}

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

HullResult convex_hull(const std::vector<RatVec>& points, int ambient_dim) {
  if (points.empty()) fail(Errc::degenerate_input, "convex_hull: no points");
  if (ambient_dim < 1 || ambient_dim > 3)
    fail(Errc::dimension_unsupported, "convex_hull: ambient dimension must be 1, 2, or 3");
  for (const RatVec& p : points)
    if (static_cast<int>(p.size()) != ambient_dim)
      fail(Errc::degenerate_input, "convex_hull: inconsistent point dimension");
  std::vector<RatVec> pts = dedup_sorted(points);
  int rank = affine_rank(pts);
  if (rank < ambient_dim) {
    HullResult h;
    h.dim = rank;
    h.vertices = pts;
    return h;
  }
  switch (ambient_dim) {
    case 1:
      return hull_1d(pts);
    case 2:
      return hull_2d(pts);
    default:
      return hull_3d(pts);
  }
}

Triangulation fan_triangulation(const HullResult& hull, const RatVec& apex) {
  const int n = static_cast<int>(apex.size());
  Triangulation tri;
  for (const Facet& f : hull.facets) {
    if (dot(f.normal, apex) == f.offset) continue;  // apex on this facet
    if (n == 1) {
      tri.simplices.push_back({{apex, hull.vertices[f.loop[0]]}});
    } else if (n == 2) {
      tri.simplices.push_back({{apex, hull.vertices[f.loop[0]], hull.vertices[f.loop[1]]}});
    } else {
      const std::vector<int>& loop = f.loop;
      for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
        tri.simplices.push_back({{apex, hull.vertices[loop[0]], hull.vertices[loop[i]],
                                  hull.vertices[loop[i + 1]]}});
      }
    }
  }
  return tri;
}

Rat simplex_volume(const Simplex& s) {
  const std::size_t n = s.verts.size() - 1;
  std::vector<RatVec> rows;
  for (std::size_t i = 1; i <= n; ++i) rows.push_back(s.verts[i] - s.verts[0]);
  // Exact determinant by elimination.
  Rat det = 1;
  std::vector<RatVec> a = rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  if (det < 0) det = -det;
  return det / Rat(factorial(static_cast<int>(n)));
}

Rat integrate_affine_product(const Simplex& s, const std::vector<AffineForm>& forms) {
  const int d = static_cast<int>(forms.size());
  const int n = static_cast<int>(s.verts.size()) - 1;
  if (d > 4) fail(Errc::degree_unsupported, "integrate_affine_product: degree > 4");
  Rat vol = simplex_volume(s);
  if (d == 0 || vol == 0) return d == 0 ? vol : Rat(0);

  // Polarize the product into powers, then use
  //   \int_S g^d = vol * d! n!/(n+d)! * h_d(g(p_0), ..., g(p_n)).
  Rat total = 0;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<Rat> vals(s.verts.size(), Rat(0));
    int bits = 0;
    for (int j = 0; j < d; ++j)
      if (mask & (1u << j)) {
        ++bits;
        for (std::size_t v = 0; v < s.verts.size(); ++v) vals[v] += forms[j](s.verts[v]);
      }
    Rat term = complete_homogeneous(vals, d);
    if ((d - bits) % 2 == 1) term = -term;
    total += term;
  }
  return vol * total * Rat(factorial(n)) / Rat(factorial(n + d));
}

std::optional<HullResult> intersect_halfspaces(const std::vector<AffineForm>& leq_zero,
                                               int ambient_dim) {
  const int n = ambient_dim;
  const int m = static_cast<int>(leq_zero.size());
  std::vector<RatVec> candidates;

  // Enumerate basic solutions of n-subsets of the bounding hyperplanes.
  std::vector<int> idx(n);
  auto solve_subset = [&](const std::vector<int>& sel) -> std::optional<RatVec> {
    std::vector<RatVec> a;
    RatVec rhs;
    for (int i : sel) {
      a.push_back(leq_zero[i].a);
      rhs.push_back(-leq_zero[i].b);
    }
    // Gaussian elimination on the n x n system.
    for (int c = 0; c < n; ++c) {
      int pivot = -1;
      for (int r = c; r < n; ++r)
        if (a[r][c] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return std::nullopt;
      std::swap(a[pivot], a[c]);
      std::swap(rhs[pivot], rhs[c]);
      for (int r = 0; r < n; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rat f = a[r][c] / a[c][c];
        for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        rhs[r] -= f * rhs[c];
      }
    }
    RatVec x(n);
    for (int c = 0; c < n; ++c) x[c] = rhs[c] / a[c][c];
    return x;
  };

  std::vector<int> sel(n);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == n) {
      if (auto x = solve_subset(sel)) {
        bool feasible = true;
        for (const AffineForm& f : leq_zero)
          if (f(*x) > 0) {
            feasible = false;
            break;
          }
        if (feasible) candidates.push_back(*x);
      }
      return;
    }
    for (int i = start; i < m; ++i) {
      sel[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);

  if (candidates.empty()) return std::nullopt;
  std::vector<RatVec> verts = dedup_sorted(candidates);
  if (affine_rank(verts) < n) return std::nullopt;
  return convex_hull(verts, n);
}

void ReflexivePolytope::require_reflexive(const char* who) const {
  if (!reflexive_)
    fail(Errc::not_reflexive, std::string(who) + ": polytope is not reflexive");
}

ReflexivePolytope ReflexivePolytope::from_vertices(const std::vector<RatVec>& points) {
  if (points.empty()) fail(Errc::degenerate_input, "from_vertices: no points");
  const int n = static_cast<int>(points[0].size());
  if (n < 1 || n > 3)
    fail(Errc::dimension_unsupported, "from_vertices: dimension must be 1, 2, or 3");
  HullResult h = convex_hull(points, n);
  if (h.dim < n)
    fail(Errc::degenerate_input, "from_vertices: points are not full-dimensional");

  ReflexivePolytope p;
  p.n_ = n;
  p.vertices_ = h.vertices;
  p.facets_ = h.facets;

  p.origin_interior_ = true;
  bool offsets_one = true;
  for (const Facet& f : p.facets_) {
    if (f.offset <= 0) p.origin_interior_ = false;
    if (f.offset != 1) offsets_one = false;
  }
  p.reflexive_ = p.origin_interior_ && offsets_one;

  RatVec apex = p.origin_interior_ ? zero_vec(n) : p.vertices_.front();
  p.tri_ = fan_triangulation(h, apex);

  p.volume_ = 0;
  p.moment1_ = zero_vec(n);
  for (const Simplex& s : p.tri_.simplices) {
    p.volume_ += simplex_volume(s);
    for (int i = 0; i < n; ++i)
      p.moment1_[i] += tsol::integrate_affine_product(s, {coordinate_form(n, i)});
  }
  return p;
}

RatVec ReflexivePolytope::barycenter() const {
  return (Rat(1) / volume_) * moment1_;
}

bool ReflexivePolytope::contains(const RatVec& x) const {
  for (const Facet& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

Rat ReflexivePolytope::integrate_monomial(const std::vector<int>& exponents) const {
  int total = 0;
  for (int e : exponents) total += e;
  if (total > 4) fail(Errc::degree_unsupported, "integrate_monomial: degree > 4");
  std::vector<AffineForm> forms;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (int r = 0; r < exponents[i]; ++r) forms.push_back(coordinate_form(n_, i));
  return integrate_affine_product(forms);
}

Rat ReflexivePolytope::integrate_affine_product(const std::vector<AffineForm>& forms) const {
  if (forms.size() > 4) fail(Errc::degree_unsupported, "integrate_affine_product: degree > 4");
  Rat total = 0;
  for (const Simplex& s : tri_.simplices) total += tsol::integrate_affine_product(s, forms);
  return total;
}

std::pair<Rat, RatVec> ReflexivePolytope::max_affine(const AffineForm& f) const {
  Rat best = f(vertices_.front());
  RatVec arg = vertices_.front();
  for (const RatVec& v : vertices_) {
    Rat val = f(v);
    if (val > best) {
      best = val;
      arg = v;
    }
    // vertices_ is lex-sorted, so the first maximizer is the lex-smallest
  }
  return {best, arg};
}

std::vector<std::vector<long>> ReflexivePolytope::lattice_points(long k) const {
  std::vector<long> lo(n_), hi(n_);
  for (int i = 0; i < n_; ++i) {
    Rat mn = vertices_[0][i], mx = vertices_[0][i];
    for (const RatVec& v : vertices_) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = static_cast<long>(rat_floor(Rat(k) * mn).convert_to<long long>());
    hi[i] = static_cast<long>(-rat_floor(-Rat(k) * mx).convert_to<long long>());
  }
  std::vector<std::vector<long>> out;
  std::vector<long> x(n_);
  auto inside = [&]() {
    RatVec q(n_);
    for (int i = 0; i < n_; ++i) q[i] = x[i];
    for (const Facet& f : facets_)
      if (dot(f.normal, q) > Rat(k) * f.offset) return false;
    return true;
  };
  auto rec = [&](auto&& self, int d) -> void {
    if (d == n_) {
      if (inside()) out.push_back(x);
      return;
    }
    for (long v = lo[d]; v <= hi[d]; ++v) {
      x[d] = v;
      self(self, d + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace tsol
