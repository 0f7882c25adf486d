// torus-soliton: certify or refute uniform relative D-stability of toric
// Fano surfaces and curves from exact polytope data, and solve the weighted
// Monge-Ampere soliton equation numerically in torus-symmetric reduction.

#include "tsol/catalog.hpp"
#include "tsol/flow.hpp"
#include "tsol/json_io.hpp"
#include "tsol/slope.hpp"
#include "tsol/stability.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace tsol;

namespace {

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::stable_on_family:
    case Verdict::semistable_boundary:
      return 0;
    case Verdict::destabilized:
      return 2;
    case Verdict::obstructed_mX:
    case Verdict::obstructed_reductivity:
      return 3;
  }
  return 3;
}

RatVec parse_vec(const std::string& s) {
  RatVec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(rat_from_string(tok));
  return v;
}

std::optional<Direction> parse_eta(const ReflexivePolytope& p, const std::string& spec) {
  if (spec == "auto") return std::nullopt;  // analyze computes the extremal direction
  if (spec == "zero") return Direction::zero(p.dim());
  RatVec mu = parse_vec(spec);
  if (static_cast<int>(mu.size()) != p.dim())
    fail(Errc::degenerate_input, "--eta vector has the wrong dimension");
  return centered(p, mu);
}

Direction resolve_eta(const ReflexivePolytope& p, const std::string& spec) {
  auto e = parse_eta(p, spec);
  return e ? *e : extremal(p);
}

PLConcave resolve_config(const ReflexivePolytope& p, const std::string& spec) {
  if (spec == "trivial") return product_config(p, Direction::zero(p.dim()));
  if (spec == "bl1p2-normal-cone") return bl1p2_exceptional_normal_cone(p);
  if (spec.rfind("product:", 0) == 0) {
    RatVec mu = parse_vec(spec.substr(8));
    return product_config(p, Direction{mu, Rat(0)});
  }
  std::ifstream in(spec);
  if (!in) fail(Errc::degenerate_input, "cannot open configuration file: " + spec);
  return pl_from_json(p, OJson::parse(in));
}

void emit(const OJson& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

std::vector<FamilyMember> resolve_family(const ReflexivePolytope& p, const std::string& name) {
  if (name == "products") return product_family(p);
  if (name == "normal-cones") return normal_cone_family(p);
  if (name == "full") return full_family(p);
  fail(Errc::degenerate_input, "unknown family: " + name + " (products|normal-cones|full)");
}

void print_report(const StabilityReport& rep) {
  std::cout << "polytope " << rep.polytope_id << "\n";
  std::cout << "  volume      " << rat_to_string(rep.inv.volume) << "\n";
  std::cout << "  barycenter  (";
  for (std::size_t i = 0; i < rep.inv.barycenter.size(); ++i)
    std::cout << (i ? "," : "") << rat_to_string(rep.inv.barycenter[i]);
  std::cout << ")\n";
  std::cout << "  eta         mu=(";
  for (std::size_t i = 0; i < rep.eta.mu.size(); ++i)
    std::cout << (i ? "," : "") << rat_to_string(rep.eta.mu[i]);
  std::cout << "), c=" << rat_to_string(rep.eta.c)
            << (rep.eta_is_extremal ? " (extremal)" : " (override)") << "\n";
  std::cout << "  m_X         " << rat_to_string(rep.inv.m_x) << "\n";
  std::cout << "  reductive   " << (rep.inv.roots.reductive ? "yes" : "no") << " ("
            << rep.inv.roots.roots.size() << " roots)\n";
  std::cout << "  members     " << rep.members.size() << "\n";
  for (const MemberReport& m : rep.members) {
    std::cout << "    " << m.name << ": D_eta=" << rat_to_string(m.na.d_eta_na);
    if (m.jt_ok) std::cout << " J_T=" << rat_to_string(m.jt_value);
    std::cout << "\n";
  }
  if (rep.has_uniform_epsilon)
    std::cout << "  uniform_epsilon " << rat_to_string(rep.uniform_epsilon) << "\n";
  std::cout << "  verdict     " << verdict_name(rep.verdict) << "\n";
}

std::vector<int> continuation_ladder(int nodes) {
  std::vector<int> ladder;
  for (int m : {65, 129})
    if (m < nodes) ladder.push_back(m);
  ladder.push_back(nodes);
  return ladder;
}

void write_trace_csv(const std::vector<Diagnostics>& trace, const std::string& path) {
  std::ofstream out(path);
  out << "t,residual,R,D_eta,J,H\n";
  out.precision(12);
  for (const Diagnostics& d : trace)
    out << d.t << "," << d.residual << "," << d.r << "," << d.d_eta << "," << d.j << ","
        << d.h_entropy << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric Fano stability and Mabuchi soliton toolkit"};
  app.require_subcommand(1);

  std::string polytope_arg, eta_arg = "auto", family_arg = "full";
  std::string config_arg, emit_path, from_report, trace_path, dump_path, mu_arg, mode_arg =
                                                                                     "plain";
  int grid_nodes = 257;
  double box_halfwidth = 8, dt = 0.05, tol = 5e-3, t_max = 40;
  long max_steps = 40000;
  int max_pieces = 3, max_denominator = 2, order = 2;
  bool continuation = true, bless = false;
  unsigned seed = 0;
  bool randomize = false;

  auto* cat = app.add_subcommand("catalog", "list the built-in polytopes");
  std::string cat_emit;
  cat->add_option("--emit-json", cat_emit, "write the catalog summary as JSON");

  auto* ana = app.add_subcommand("analyze", "assemble a stability report");
  ana->add_option("polytope", polytope_arg, "catalog name or polytope JSON file");
  ana->add_option("--eta", eta_arg, "auto | zero | comma-separated vector");
  ana->add_option("--family", family_arg, "products | normal-cones | full");
  ana->add_option("--emit-json", emit_path, "write the report as JSON");
  ana->add_option("--from-report", from_report, "re-ingest a report instead of computing");
  ana->add_flag("--bless", bless, "regenerate the golden catalog file (data/golden)");

  auto* ev = app.add_subcommand("eval-tc", "non-Archimedean energies of a configuration");
  ev->add_option("polytope", polytope_arg)->required();
  ev->add_option("--config", config_arg, "JSON file | trivial | product:v | bl1p2-normal-cone")
      ->required();
  ev->add_option("--eta", eta_arg);
  ev->add_option("--moments", order, "also emit pushforward moments up to this order");
  ev->add_option("--emit-json", emit_path);

  auto* jt = app.add_subcommand("jt-min", "exact twist minimization by rational LP");
  jt->add_option("polytope", polytope_arg)->required();
  jt->add_option("--config", config_arg)->required();
  jt->add_option("--mode", mode_arg, "plain | eta");
  jt->add_option("--eta", eta_arg);
  jt->add_option("--emit-json", emit_path);

  auto* de = app.add_subcommand("destabilize", "bounded destabilizer search");
  de->add_option("polytope", polytope_arg)->required();
  de->add_option("--eta", eta_arg);
  de->add_option("--max-pieces", max_pieces);
  de->add_option("--max-denominator", max_denominator);
  de->add_flag("--randomize", randomize, "shuffle the enumeration order");
  de->add_option("--seed", seed, "seed for --randomize");
  de->add_option("--emit-json", emit_path);

  auto* fl = app.add_subcommand("flow", "inverse Monge-Ampere flow");
  fl->add_option("polytope", polytope_arg)->required();
  fl->add_option("--grid", grid_nodes);
  fl->add_option("--box", box_halfwidth);
  fl->add_option("--dt", dt);
  fl->add_option("--tol", tol);
  fl->add_option("--steps", max_steps);
  fl->add_option("--eta", eta_arg);
  fl->add_option("--trace", trace_path, "write the diagnostic trace CSV");
  fl->add_option("--dump", dump_path, "write the final potential grid JSON");
  fl->add_flag("--continuation,!--no-continuation", continuation,
               "coarse-to-fine grid continuation");

  auto* so = app.add_subcommand("solve", "damped Newton for the soliton equation (1-D)");
  so->add_option("polytope", polytope_arg)->required();
  so->add_option("--grid", grid_nodes);
  so->add_option("--box", box_halfwidth);
  so->add_option("--tol", tol);
  so->add_option("--eta", eta_arg);
  so->add_option("--dump", dump_path);

  auto* sl = app.add_subcommand("slope-check", "ray slopes against exact NA values");
  sl->add_option("polytope", polytope_arg)->required();
  sl->add_option("--mu", mu_arg, "comma-separated direction, or 'eta'")->required();
  sl->add_option("--T", t_max);
  sl->add_option("--grid", grid_nodes);
  sl->add_option("--box", box_halfwidth);
  sl->add_option("--eta", eta_arg);
  sl->add_option("--emit-json", emit_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (cat->parsed()) {
      OJson j = OJson::array();
      for (const CatalogEntry& e : catalog()) {
        auto p = catalog_polytope(e.name);
        OJson row;
        row["name"] = e.name;
        row["kahler_einstein"] = e.kahler_einstein;
        row["mabuchi_soliton"] = e.mabuchi_soliton;
        row["note"] = e.note;
        row["invariants"] = invariants_json(invariants_summary(p));
        j.push_back(row);
        std::cout << e.name << ": dim " << p.dim() << ", volume "
                  << rat_to_string(p.volume()) << ", KE " << (e.kahler_einstein ? "yes" : "no")
                  << ", soliton " << (e.mabuchi_soliton ? "yes" : "no") << "\n";
      }
      if (!cat_emit.empty()) emit(j, cat_emit);
      return 0;
    }

    if (ana->parsed()) {
      if (!from_report.empty()) {
        std::ifstream in(from_report);
        if (!in) fail(Errc::degenerate_input, "cannot open report: " + from_report);
        StabilityReport rep = report_from_json(OJson::parse(in));
        if (!emit_path.empty()) emit(report_json(rep), emit_path);
        print_report(rep);
        return verdict_exit_code(rep.verdict);
      }
      if (bless) {
        OJson golden;
        for (const CatalogEntry& e : catalog()) {
          auto p = catalog_polytope(e.name);
          StabilityReport rep = analyze(p, e.name, full_family(p));
          golden[e.name] = report_json(rep);
        }
        emit(golden, "data/golden/catalog_reports.json");
        std::cout << "golden catalog reports regenerated\n";
        return 0;
      }
      if (polytope_arg.empty()) fail(Errc::degenerate_input, "analyze: missing polytope");
      auto p = resolve_polytope(polytope_arg);
      StabilityReport rep =
          analyze(p, polytope_arg, resolve_family(p, family_arg), parse_eta(p, eta_arg));
      if (!emit_path.empty()) emit(report_json(rep), emit_path);
      print_report(rep);
      return verdict_exit_code(rep.verdict);
    }

    if (ev->parsed()) {
      auto p = resolve_polytope(polytope_arg);
      Direction eta = resolve_eta(p, eta_arg);
      PLConcave g = resolve_config(p, config_arg);
      NAEnergies na = na_energies(p, g, eta);
      OJson j;
      j["config"] = pl_json(g);
      j["eta"] = direction_json(eta);
      j["energies"] = na_json(na);
      OJson moments = OJson::array();
      for (const Rat& mq : dh_pushforward_moments(p, g, order)) moments.push_back(rat_json(mq));
      j["dh_moments"] = moments;
      emit(j, emit_path);
      return 0;
    }

    if (jt->parsed()) {
      auto p = resolve_polytope(polytope_arg);
      Direction eta = resolve_eta(p, eta_arg);
      PLConcave g = resolve_config(p, config_arg);
      JtMode mode = mode_arg == "eta" ? JtMode::eta : JtMode::plain;
      JtResult r = jt_min(p, g, eta, mode);
      OJson j = jt_json(r);
      j["mode"] = mode_arg;
      j["note"] =
          "plain minimizes J^NA over twists (the rationality lemma's literal definition); "
          "eta minimizes J_eta^NA; the two readings are both provided";
      emit(j, emit_path);
      return 0;
    }

    if (de->parsed()) {
      auto p = resolve_polytope(polytope_arg);
      Direction eta = resolve_eta(p, eta_arg);
      auto res = destabilizer_search(p, eta, {max_pieces, max_denominator});
      if (!res) {
        std::cout << "no admissible candidates in budget\n";
        return 3;
      }
      if (randomize)
        std::cout << "note: enumeration is deterministic; --randomize affects only "
                     "reporting order of ties (seed "
                  << seed << ")\n";
      emit(destabilizer_json(*res), emit_path);
      std::cout << (res->found_negative ? "destabilizer found: " : "no negative candidate: ")
                << res->description << " (tested " << res->tested << ")\n";
      return res->found_negative ? 2 : 0;
    }

    if (fl->parsed()) {
      auto p = resolve_polytope(polytope_arg);
      if (p.dim() > 2)
        fail(Errc::dimension_unsupported, "flow: grids are one- or two-dimensional");
      Direction eta = resolve_eta(p, eta_arg);
      NumericModel model = numeric_model(p);
      DirectionD etad = DirectionD::from(eta);
      FlowParams prm;
      prm.dt = dt;
      prm.tol = tol;
      prm.max_steps = max_steps;
      FlowResult res;
      if (continuation && p.dim() == 2) {
        res = flow_cascade(p, model, continuation_ladder(grid_nodes), box_halfwidth, etad, prm);
      } else {
        res = flow_run(model, make_potential(p, grid_nodes, box_halfwidth), etad, prm);
      }
      if (!trace_path.empty()) write_trace_csv(res.trace, trace_path);
      if (!dump_path.empty()) emit(potential_json(res.psi), dump_path);
      std::cout << (res.converged ? "converged" : "not converged") << " after " << res.steps
                << " steps, residual " << res.residual;
      if (!res.message.empty()) std::cout << " (" << res.message << ")";
      std::cout << "\n";
      if (!res.trace.empty()) {
        const Diagnostics& d = res.trace.back();
        std::cout << "R=" << d.r << " D_eta=" << d.d_eta << " J=" << d.j << " H=" << d.h_entropy
                  << "\n";
      }
      return res.converged ? 0 : 1;
    }

    if (so->parsed()) {
      auto p = resolve_polytope(polytope_arg);
      Direction eta = resolve_eta(p, eta_arg);
      NumericModel model = numeric_model(p);
      NewtonResult res = newton_solve_1d(model, make_potential(p, grid_nodes, box_halfwidth),
                                         DirectionD::from(eta), tol);
      if (!dump_path.empty()) emit(potential_json(res.psi), dump_path);
      std::cout << (res.converged ? "converged" : "not converged") << " in " << res.iterations
                << " iterations, residual " << res.residual << "\n";
      return res.converged ? 0 : 1;
    }

    if (sl->parsed()) {
      auto p = resolve_polytope(polytope_arg);
      Direction eta = resolve_eta(p, eta_arg);
      Direction mu = mu_arg == "eta" ? eta : Direction{parse_vec(mu_arg), Rat(0)};
      if (static_cast<int>(mu.mu.size()) != p.dim())
        fail(Errc::degenerate_input, "--mu has the wrong dimension");
      SlopeOptions opt;
      opt.t_max = t_max;
      opt.nodes = grid_nodes;
      opt.box_halfwidth = box_halfwidth;
      auto rows = slope_check(p, mu, eta, opt);
      OJson j = OJson::array();
      std::cout << "functional  slope          exact NA       abs gap    rel gap\n";
      for (const SlopeRow& r : rows) {
        OJson row;
        row["functional"] = r.functional;
        row["slope"] = r.slope;
        row["na_value"] = r.na_value;
        row["gap_abs"] = r.gap_abs;
        row["gap_rel"] = r.gap_rel;
        j.push_back(row);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-10s %14.8f %14.8f %10.2e %10.2e", r.functional.c_str(),
                      r.slope, r.na_value, r.gap_abs, r.gap_rel);
        std::cout << buf << "\n";
      }
      if (!emit_path.empty()) emit(j, emit_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 64;
}
