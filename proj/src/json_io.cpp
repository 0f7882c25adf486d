#include "tsol/json_io.hpp"

#include "tsol/catalog.hpp"

#include <fstream>

namespace tsol {

OJson rat_json(const Rat& q) { return rat_to_string(q); }

OJson rat_vec_json(const RatVec& v) {
  OJson arr = OJson::array();
  for (const Rat& q : v) arr.push_back(rat_json(q));
  return arr;
}

Rat rat_from_json(const OJson& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  fail(Errc::degenerate_input, "expected a rational as string or integer");
}

RatVec rat_vec_from_json(const OJson& j) {
  RatVec v;
  for (const auto& item : j) v.push_back(rat_from_json(item));
  return v;
}

OJson polytope_json(const ReflexivePolytope& p) {
  OJson j;
  OJson verts = OJson::array();
  for (const RatVec& v : p.vertices()) verts.push_back(rat_vec_json(v));
  j["vertices"] = verts;
  return j;
}

ReflexivePolytope polytope_from_json(const OJson& j) {
  if (!j.contains("vertices"))
    fail(Errc::degenerate_input, "polytope JSON lacks a 'vertices' array");
  std::vector<RatVec> verts;
  for (const auto& row : j["vertices"]) verts.push_back(rat_vec_from_json(row));
  return ReflexivePolytope::from_vertices(verts);
}

ReflexivePolytope resolve_polytope(const std::string& name_or_path) {
  if (is_catalog_name(name_or_path)) return catalog_polytope(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) fail(Errc::degenerate_input, "cannot open polytope file: " + name_or_path);
  OJson j = OJson::parse(in);
  return polytope_from_json(j);
}

OJson pl_json(const PLConcave& g) {
  OJson j;
  OJson pieces = OJson::array();
  for (const AffineForm& f : g.pieces) {
    OJson p;
    p["a"] = rat_vec_json(f.a);
    p["b"] = rat_json(f.b);
    pieces.push_back(p);
  }
  j["pieces"] = pieces;
  return j;
}

PLConcave pl_from_json(const ReflexivePolytope& p, const OJson& j) {
  if (!j.contains("pieces")) fail(Errc::degenerate_input, "PL JSON lacks 'pieces'");
  std::vector<AffineForm> data;
  for (const auto& piece : j["pieces"]) {
    AffineForm f;
    f.a = rat_vec_from_json(piece.at("a"));
    f.b = rat_from_json(piece.at("b"));
    data.push_back(f);
  }
  bool include_zero = j.value("include_zero", false);
  return from_creases(p, data, include_zero);
}

namespace {

void put_rat(OJson& j, const std::string& key, const Rat& q) {
  j[key] = rat_json(q);
  j[key + "_approx"] = to_double(q);
}

}  // namespace

OJson na_json(const NAEnergies& na) {
  OJson j;
  put_rat(j, "e_na", na.e_na);
  put_rat(j, "l0_na", na.l0_na);
  put_rat(j, "l_na", na.l_na);
  put_rat(j, "e_eta_na", na.e_eta_na);
  put_rat(j, "d_eta_na", na.d_eta_na);
  put_rat(j, "j_na", na.j_na);
  put_rat(j, "j_eta_na", na.j_eta_na);
  return j;
}

NAEnergies na_from_json(const OJson& j) {
  NAEnergies na;
  na.e_na = rat_from_json(j.at("e_na"));
  na.l0_na = rat_from_json(j.at("l0_na"));
  na.l_na = rat_from_json(j.at("l_na"));
  na.e_eta_na = rat_from_json(j.at("e_eta_na"));
  na.d_eta_na = rat_from_json(j.at("d_eta_na"));
  na.j_na = rat_from_json(j.at("j_na"));
  na.j_eta_na = rat_from_json(j.at("j_eta_na"));
  return na;
}

OJson direction_json(const Direction& d) {
  OJson j;
  j["mu"] = rat_vec_json(d.mu);
  j["c"] = rat_json(d.c);
  return j;
}

Direction direction_from_json(const OJson& j) {
  Direction d;
  d.mu = rat_vec_from_json(j.at("mu"));
  d.c = rat_from_json(j.at("c"));
  return d;
}

OJson invariants_json(const InvariantsSummary& s) {
  OJson j;
  put_rat(j, "volume", s.volume);
  j["barycenter"] = rat_vec_json(s.barycenter);
  j["futaki"] = rat_vec_json(s.futaki_vector);
  j["eta"] = direction_json(s.eta);
  put_rat(j, "eta_norm_sq", s.eta_norm_sq);
  put_rat(j, "m_x", s.m_x);
  j["reductive"] = s.roots.reductive;
  OJson roots = OJson::array();
  for (const RatVec& r : s.roots.roots) roots.push_back(rat_vec_json(r));
  j["roots"] = roots;
  OJson orth = OJson::array();
  for (const RatVec& r : s.roots.eta_orthogonal) orth.push_back(rat_vec_json(r));
  j["roots_eta_orthogonal"] = orth;
  return j;
}

OJson jt_json(const JtResult& r) {
  OJson j;
  j["mu_star"] = rat_vec_json(r.mu_star.mu);
  put_rat(j, "value", r.value);
  OJson cert = OJson::array();
  for (const auto& [v, w] : r.certificate) {
    OJson c;
    c["vertex"] = rat_vec_json(v);
    c["weight"] = rat_json(w);
    cert.push_back(c);
  }
  j["certificate"] = cert;
  return j;
}

OJson report_json(const StabilityReport& rep) {
  OJson j;
  j["polytope"] = rep.polytope_id;
  j["invariants"] = invariants_json(rep.inv);
  j["eta_is_extremal"] = rep.eta_is_extremal;
  j["eta"] = direction_json(rep.eta);
  OJson members = OJson::array();
  for (const MemberReport& m : rep.members) {
    OJson mj;
    mj["name"] = m.name;
    mj["is_product"] = m.is_product;
    mj["nontrivial"] = m.nontrivial;
    mj["energies"] = na_json(m.na);
    mj["jt_ok"] = m.jt_ok;
    if (m.jt_ok) {
      put_rat(mj, "jt_value", m.jt_value);
      mj["jt_mu_star"] = rat_vec_json(m.jt_mu_star.mu);
    }
    members.push_back(mj);
  }
  j["members"] = members;
  if (rep.has_uniform_epsilon)
    put_rat(j, "uniform_epsilon", rep.uniform_epsilon);
  else
    j["uniform_epsilon"] = nullptr;
  j["verdict"] = verdict_name(rep.verdict);
  return j;
}

StabilityReport report_from_json(const OJson& j) {
  StabilityReport rep;
  rep.polytope_id = j.at("polytope").get<std::string>();
  const OJson& inv = j.at("invariants");
  rep.inv.volume = rat_from_json(inv.at("volume"));
  rep.inv.barycenter = rat_vec_from_json(inv.at("barycenter"));
  rep.inv.futaki_vector = rat_vec_from_json(inv.at("futaki"));
  rep.inv.eta = direction_from_json(inv.at("eta"));
  rep.inv.eta_norm_sq = rat_from_json(inv.at("eta_norm_sq"));
  rep.inv.m_x = rat_from_json(inv.at("m_x"));
  rep.inv.roots.reductive = inv.at("reductive").get<bool>();
  for (const auto& r : inv.at("roots")) rep.inv.roots.roots.push_back(rat_vec_from_json(r));
  for (const auto& r : inv.at("roots_eta_orthogonal"))
    rep.inv.roots.eta_orthogonal.push_back(rat_vec_from_json(r));
  rep.eta_is_extremal = j.at("eta_is_extremal").get<bool>();
  rep.eta = direction_from_json(j.at("eta"));
  for (const auto& mj : j.at("members")) {
    MemberReport m;
    m.name = mj.at("name").get<std::string>();
    m.is_product = mj.at("is_product").get<bool>();
    m.nontrivial = mj.at("nontrivial").get<bool>();
    m.na = na_from_json(mj.at("energies"));
    m.jt_ok = mj.at("jt_ok").get<bool>();
    if (m.jt_ok) {
      m.jt_value = rat_from_json(mj.at("jt_value"));
      m.jt_mu_star.mu = rat_vec_from_json(mj.at("jt_mu_star"));
      m.jt_mu_star.c = 0;
    }
    rep.members.push_back(std::move(m));
  }
  if (!j.at("uniform_epsilon").is_null()) {
    rep.has_uniform_epsilon = true;
    rep.uniform_epsilon = rat_from_json(j.at("uniform_epsilon"));
  }
  std::string v = j.at("verdict").get<std::string>();
  for (Verdict cand :
       {Verdict::stable_on_family, Verdict::semistable_boundary, Verdict::destabilized,
        Verdict::obstructed_mX, Verdict::obstructed_reductivity}) {
    if (v == verdict_name(cand)) rep.verdict = cand;
  }
  return rep;
}

OJson destabilizer_json(const DestabilizerResult& r) {
  OJson j;
  j["found_negative"] = r.found_negative;
  j["budget_exhausted"] = r.budget_exhausted;
  j["tested"] = r.tested;
  j["candidate"] = r.description;
  j["config"] = pl_json(r.config);
  j["energies"] = na_json(r.na);
  if (r.ratio_defined)
    put_rat(j, "ratio", r.ratio);
  else
    j["ratio"] = nullptr;
  return j;
}

OJson diagnostics_json(const Diagnostics& d) {
  OJson j;
  j["t"] = d.t;
  j["E"] = d.e;
  j["E_eta"] = d.e_eta;
  j["L"] = d.l;
  j["L0"] = d.l0;
  j["D"] = d.d;
  j["D_eta"] = d.d_eta;
  j["J"] = d.j;
  j["J_eta"] = d.j_eta;
  j["J_T"] = d.j_t;
  j["I_ref"] = d.i_ref;
  j["R"] = d.r;
  j["H"] = d.h_entropy;
  j["M_eta"] = d.m_eta;
  j["residual"] = d.residual;
  j["ma_mass"] = d.ma_mass;
  return j;
}

OJson potential_json(const ConvexPotential& psi) {
  OJson j;
  j["dim"] = psi.grid.n;
  j["nodes"] = psi.grid.m;
  j["box_halfwidth"] = psi.grid.R;
  j["values_are_u"] = true;  // u = psi - psi0
  j["u"] = psi.u;
  return j;
}

}  // namespace tsol
