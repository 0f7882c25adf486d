#include "tsol/stability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tsol {

namespace {

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

// Inward primitive normals (the fan rays of the variety itself).
std::vector<RatVec> inward_normals(const ReflexivePolytope& p) {
  std::vector<RatVec> out;
  for (const Facet& f : p.facets()) out.push_back(-f.normal);
  return out;
}

struct ConeSpec {
  std::string label;
  RatVec direction;  // vanishing-order density is <x, direction> + order_offset
  Rat order_offset;
};

std::vector<ConeSpec> cone_specs(const ReflexivePolytope& p) {
  std::vector<ConeSpec> specs;
  std::vector<RatVec> inward = inward_normals(p);
  for (std::size_t i = 0; i < inward.size(); ++i) {
    specs.push_back({"facet" + vec_str(p.facets()[i].normal), inward[i], p.facets()[i].offset});
  }
  // A torus-fixed point is a vertex; its blow-up ideal vanishes to the summed
  // order of the facets through it.
  for (const RatVec& v : p.vertices()) {
    RatVec dir = zero_vec(p.dim());
    Rat off = 0;
    int count = 0;
    for (std::size_t i = 0; i < inward.size(); ++i) {
      if (dot(p.facets()[i].normal, v) == p.facets()[i].offset) {
        dir = dir + inward[i];
        off += p.facets()[i].offset;
        ++count;
      }
    }
    if (count >= p.dim() && !is_zero(dir)) specs.push_back({"vertex" + vec_str(v), dir, off});
  }
  return specs;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::stable_on_family:
      return "stable_on_family";
    case Verdict::semistable_boundary:
      return "semistable_boundary";
    case Verdict::destabilized:
      return "destabilized";
    case Verdict::obstructed_mX:
      return "obstructed_mX";
    case Verdict::obstructed_reductivity:
      return "obstructed_reductivity";
  }
  return "?";
}

std::vector<FamilyMember> product_family(const ReflexivePolytope& p) {
  std::vector<FamilyMember> family;
  const int n = p.dim();
  for (int i = 0; i < n; ++i) {
    for (int s : {+1, -1}) {
      Direction mu = Direction::zero(n);
      mu.mu[i] = s;
      FamilyMember m;
      m.name = "product" + vec_str(mu.mu);
      m.is_product = true;
      m.config = product_config(p, mu);
      family.push_back(std::move(m));
    }
  }
  return family;
}

std::vector<FamilyMember> normal_cone_family(const ReflexivePolytope& p) {
  std::vector<FamilyMember> family;
  const int n = p.dim();
  for (const ConeSpec& spec : cone_specs(p)) {
    // Admissible blow-up parameters: the density <x,dir> + off spans
    // [0, width] on P; the ladder runs over the integer rungs.
    Rat width = p.max_affine({spec.direction, spec.order_offset}).first;
    long wmax = static_cast<long>(rat_floor(width).convert_to<long long>());
    for (long eps = 1; eps <= wmax; ++eps) {
      FamilyMember m;
      m.name = "normal-cone(" + spec.label + ",eps=" + std::to_string(eps) + ")";
      m.is_product = false;
      m.config = from_creases(p, {{spec.direction, spec.order_offset - eps}}, true);
      family.push_back(std::move(m));
    }
  }
  return family;
}

std::vector<FamilyMember> full_family(const ReflexivePolytope& p) {
  std::vector<FamilyMember> family = product_family(p);
  std::vector<FamilyMember> cones = normal_cone_family(p);
  family.insert(family.end(), std::make_move_iterator(cones.begin()),
                std::make_move_iterator(cones.end()));
  return family;
}

StabilityReport analyze(const ReflexivePolytope& p, const std::string& id,
                        const std::vector<FamilyMember>& family,
                        std::optional<Direction> eta_override) {
  p.require_reflexive("analyze");
  StabilityReport rep;
  rep.polytope_id = id;
  rep.inv = invariants_summary(p);
  if (eta_override) {
    rep.eta = centered(p, eta_override->mu);
    rep.eta_is_extremal = false;
    // Gates are judged for the eta in force.
    rep.inv.m_x = m_x(p, rep.eta);
    rep.inv.roots = demazure_reductivity(p, rep.eta);
    rep.inv.eta_norm_sq = pairing(p, rep.eta, rep.eta);
  } else {
    rep.eta = rep.inv.eta;
  }

  bool any_negative = false;
  bool boundary = false;
  for (const FamilyMember& member : family) {
    MemberReport mr;
    mr.name = member.name;
    mr.is_product = member.is_product;
    mr.nontrivial = !member.config.is_trivial();
    mr.na = na_energies(p, member.config, rep.eta);
    try {
      JtResult jt = jt_min(p, member.config, rep.eta, JtMode::eta);
      mr.jt_ok = true;
      mr.jt_value = jt.value;
      mr.jt_mu_star = jt.mu_star;
    } catch (const Error& e) {
      if (e.code() != Errc::unbounded) throw;
      mr.jt_ok = false;
    }
    if (mr.na.d_eta_na < 0) any_negative = true;
    if (mr.jt_ok && mr.jt_value > 0) {
      Rat ratio = mr.na.d_eta_na / mr.jt_value;
      if (!rep.has_uniform_epsilon || ratio < rep.uniform_epsilon) {
        rep.has_uniform_epsilon = true;
        rep.uniform_epsilon = ratio;
      }
      if (mr.na.d_eta_na == 0) boundary = true;  // ratio exactly zero
    }
    // A non-product member that degenerates to a twisted product along a
    // nonzero eta realizes the extremal degeneration: D_eta = J_T = 0.
    if (!mr.is_product && mr.nontrivial && !rep.eta.is_zero() && mr.jt_ok &&
        mr.jt_value == 0 && mr.na.d_eta_na == 0)
      boundary = true;
    rep.members.push_back(std::move(mr));
  }

  if (any_negative)
    rep.verdict = Verdict::destabilized;
  else if (rep.inv.m_x <= 0)
    rep.verdict = Verdict::obstructed_mX;
  else if (!rep.inv.roots.reductive)
    rep.verdict = Verdict::obstructed_reductivity;
  else if (boundary)
    rep.verdict = Verdict::semistable_boundary;
  else
    rep.verdict = Verdict::stable_on_family;
  return rep;
}

std::optional<DestabilizerResult> destabilizer_search(const ReflexivePolytope& p,
                                                      const Direction& eta,
                                                      const DestabilizerBudget& budget) {
  p.require_reflexive("destabilizer_search");
  const int n = p.dim();

  // Crease normals: facet normals and (primitive) edge directions, both signs.
  std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> normal_set(lex_less);
  for (const Facet& f : p.facets()) {
    normal_set.insert(f.normal);
    normal_set.insert(-f.normal);
  }
  if (n >= 2) {
    const auto& verts = p.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        int shared = 0;
        for (const Facet& f : p.facets())
          if (dot(f.normal, verts[i]) == f.offset && dot(f.normal, verts[j]) == f.offset)
            ++shared;
        if (shared < n - 1) continue;  // not an edge of P
        RatVec dir = verts[j] - verts[i];
        Int den = common_denominator(dir);
        for (Rat& x : dir) x *= Rat(den);
        Int g = 0;
        for (const Rat& x : dir) g = boost::multiprecision::gcd(g, numerator(x));
        if (g > 1)
          for (Rat& x : dir) x /= Rat(g);
        normal_set.insert(dir);
        normal_set.insert(-dir);
      }
  }
  std::vector<RatVec> normals(normal_set.begin(), normal_set.end());

  DestabilizerResult best;
  bool have_best = false;
  long tested = 0;
  const int d = budget.max_denominator;

  auto offsets_for = [&](const RatVec& a) {
    // The crease <a,x> + b must change sign on P.
    Rat hi = p.max_affine({a, Rat(0)}).first;
    Rat lo = -p.max_affine({-a, Rat(0)}).first;
    std::vector<Rat> offs;
    // b strictly between -hi and -lo on the 1/d grid.
    Int jlo = rat_floor(Rat(-hi) * d) + 1;
    Int jhi = rat_floor(Rat(-lo) * d);
    if (Rat(jhi) / d == -lo) --jhi;
    for (Int j = jlo; j <= jhi; ++j) offs.push_back(Rat(j) / d);
    return offs;
  };

  auto consider = [&](const std::string& desc, const PLConcave& g) -> bool {
    ++tested;
    NAEnergies na = na_energies(p, g, eta);
    bool jt_ok = true;
    Rat jt_value = 0;
    try {
      jt_value = jt_min(p, g, eta, JtMode::eta).value;
    } catch (const Error& e) {
      if (e.code() != Errc::unbounded) throw;
      jt_ok = false;
    }
    if (na.d_eta_na < 0) {
      best = {};
      best.found_negative = true;
      best.description = desc;
      best.config = g;
      best.na = na;
      best.tested = tested;
      have_best = true;
      return true;
    }
    Rat ratio;
    bool ratio_ok = false;
    if (jt_ok && jt_value > 0) {
      ratio = na.d_eta_na / jt_value;
      ratio_ok = true;
    } else if (jt_ok && jt_value == 0 && na.d_eta_na == 0 && !g.is_trivial() &&
               !eta.is_zero()) {
      // tight along a nonzero extremal degeneration; twist-trivial
      // configurations at eta = 0 stay out of the minimum
      ratio = 0;
      ratio_ok = true;
    }
    if (ratio_ok && (!have_best || ratio < best.ratio)) {
      best.found_negative = false;
      best.description = desc;
      best.config = g;
      best.na = na;
      best.ratio = ratio;
      best.ratio_defined = true;
      have_best = true;
    }
    return false;
  };

  // Single-piece candidates (products) first, then one- and two-crease
  // configurations; deterministic lexicographic order throughout.
  for (const RatVec& a : normals) {
    Direction mu{a, Rat(0)};
    if (consider("product" + vec_str(a), product_config(p, mu))) {
      best.tested = tested;
      return best;
    }
  }
  int creases_cap = budget.max_pieces - 1;
  if (creases_cap >= 1) {
    for (std::size_t i = 0; i < normals.size(); ++i)
      for (const Rat& b : offsets_for(normals[i])) {
        PLConcave g = from_creases(p, {{normals[i], b}}, true);
        std::string desc = "creases{" + vec_str(normals[i]) + "+" + rat_to_string(b) + "}";
        if (consider(desc, g)) {
          best.tested = tested;
          return best;
        }
      }
  }
  if (creases_cap >= 2) {
    for (std::size_t i = 0; i < normals.size(); ++i)
      for (std::size_t j = i + 1; j < normals.size(); ++j)
        for (const Rat& bi : offsets_for(normals[i]))
          for (const Rat& bj : offsets_for(normals[j])) {
            PLConcave g =
                from_creases(p, {{normals[i], bi}, {normals[j], bj}}, true);
            std::string desc = "creases{" + vec_str(normals[i]) + "+" + rat_to_string(bi) +
                               ";" + vec_str(normals[j]) + "+" + rat_to_string(bj) + "}";
            if (consider(desc, g)) {
              best.tested = tested;
              return best;
            }
          }
  }

  if (!have_best) return std::nullopt;
  best.budget_exhausted = true;
  best.tested = tested;
  return best;
}

}  // namespace tsol
