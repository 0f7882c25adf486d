#include "tsol/functionals.hpp"

#include "tsol/errors.hpp"
#include "tsol/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace tsol {

namespace {

// 10-point Gauss-Legendre rule on [0, 1].
constexpr int kGL = 10;
constexpr double kGLx[kGL] = {
    0.013046735741414128, 0.067468316655507744, 0.160295215850487796, 0.283302302935376404,
    0.425562830509184394, 0.574437169490815606, 0.716697697064623596, 0.839704784149512204,
    0.932531683344492256, 0.986953264258585872};
constexpr double kGLw[kGL] = {
    0.033335672154344069, 0.074725674575290297, 0.109543181257991022, 0.134633359654998178,
    0.147762112357376435, 0.147762112357376435, 0.134633359654998178, 0.109543181257991022,
    0.074725674575290297, 0.033335672154344069};

struct PathFields {
  double mass = 0;        // int det_t dx
  double e_num = 0;       // int u det_t dx
  double e_eta_num = 0;   // int u (1 + h_eta(grad_t)) det_t dx
};

// Hessian/gradient sweep of psi_t = psi0 + t u without storing fields.
PathFields path_fields(const ConvexPotential& psi, double t, const DirectionD& eta) {
  const Grid& g = psi.grid;
  const double h2 = g.h * g.h;
  PathFields out;
  auto uat = [&](int i, int j) {
    return psi.u[g.at(ConvexPotential::reflect(i, g.m), ConvexPotential::reflect(j, g.m))];
  };
  auto pt = [&](int i, int j) { return psi.ref_at(i, j) + t * uat(i, j); };
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i) {
      double c = pt(i, 0);
      double det = (pt(i + 1, 0) - 2 * c + pt(i - 1, 0)) / h2;
      double grad = (pt(i + 1, 0) - pt(i - 1, 0)) / (2 * g.h);
      double w = g.wt(i) * g.h;
      double uu = psi.u[g.at(i)];
      double weightv = 1 + eta.c + (eta.mu.empty() ? 0.0 : eta.mu[0] * grad);
      out.mass += w * det;
      out.e_num += w * uu * det;
      out.e_eta_num += w * uu * weightv * det;
    }
    return out;
  }
  std::vector<PathFields> rows(g.m);
  parallel_rows(g.m, [&](int i) {
    PathFields acc;
    for (int j = 0; j < g.m; ++j) {
      double c = pt(i, j);
      double h11 = (pt(i + 1, j) - 2 * c + pt(i - 1, j)) / h2;
      double h22 = (pt(i, j + 1) - 2 * c + pt(i, j - 1)) / h2;
      double h12 =
          (pt(i + 1, j + 1) + pt(i - 1, j - 1) - pt(i + 1, j - 1) - pt(i - 1, j + 1)) / (4 * h2);
      double det = h11 * h22 - h12 * h12;
      double g1 = (pt(i + 1, j) - pt(i - 1, j)) / (2 * g.h);
      double g2 = (pt(i, j + 1) - pt(i, j - 1)) / (2 * g.h);
      double w = g.wt(i) * g.wt(j) * h2;
      double uu = psi.u[g.at(i, j)];
      double weightv = 1 + eta.c + eta.mu[0] * g1 + eta.mu[1] * g2;
      acc.mass += w * det;
      acc.e_num += w * uu * det;
      acc.e_eta_num += w * uu * weightv * det;
    }
    rows[i] = acc;
  });
  for (const PathFields& acc : rows) {
    out.mass += acc.mass;
    out.e_num += acc.e_num;
    out.e_eta_num += acc.e_eta_num;
  }
  return out;
}

double box_integral_exp_neg_ref(const ConvexPotential& psi) {
  const Grid& g = psi.grid;
  double acc = 0;
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i)
      acc += g.wt(i) * g.h * std::exp(-psi.ref_ext_interior_[g.at(i)]);
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j)
        acc += g.wt(i) * g.wt(j) * g.h * g.h * std::exp(-psi.ref_ext_interior_[g.at(i, j)]);
  }
  return acc;
}

}  // namespace

NumericModel numeric_model(const ReflexivePolytope& p) {
  NumericModel m;
  m.volume = to_double(p.volume());
  for (const Rat& q : p.barycenter()) m.barycenter.push_back(to_double(q));
  return m;
}

Fields compute_fields(const ConvexPotential& psi) {
  const Grid& g = psi.grid;
  const double h2 = g.h * g.h;
  Fields f;
  const std::size_t total = g.size();
  f.det.resize(total);
  f.erho.resize(total);
  f.g1.resize(total);
  f.h11.resize(total);
  if (g.n == 2) {
    f.g2.resize(total);
    f.h22.resize(total);
    f.h12.resize(total);
  }
  double can_mass = 0;
  f.min_det = 1e300;
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i) {
      double c = psi.psi(i);
      double det = (psi.psi(i + 1) - 2 * c + psi.psi(i - 1)) / h2;
      f.det[i] = det;
      f.h11[i] = det;
      f.g1[i] = (psi.psi(i + 1) - psi.psi(i - 1)) / (2 * g.h);
      f.min_det = std::min(f.min_det, det);
      double w = g.wt(i) * g.h;
      f.ma_mass += w * det;
      can_mass += w * std::exp(-c);
    }
  } else {
    std::vector<double> row_mass(g.m, 0.0), row_can(g.m, 0.0), row_min(g.m, 1e300);
    parallel_rows(g.m, [&](int i) {
      for (int j = 0; j < g.m; ++j) {
        std::size_t idx = g.at(i, j);
        double c = psi.psi(i, j);
        double h11 = (psi.psi(i + 1, j) - 2 * c + psi.psi(i - 1, j)) / h2;
        double h22 = (psi.psi(i, j + 1) - 2 * c + psi.psi(i, j - 1)) / h2;
        double h12 = (psi.psi(i + 1, j + 1) + psi.psi(i - 1, j - 1) - psi.psi(i + 1, j - 1) -
                      psi.psi(i - 1, j + 1)) /
                     (4 * h2);
        double det = h11 * h22 - h12 * h12;
        f.det[idx] = det;
        f.h11[idx] = h11;
        f.h22[idx] = h22;
        f.h12[idx] = h12;
        f.g1[idx] = (psi.psi(i + 1, j) - psi.psi(i - 1, j)) / (2 * g.h);
        f.g2[idx] = (psi.psi(i, j + 1) - psi.psi(i, j - 1)) / (2 * g.h);
        row_min[i] = std::min(row_min[i], det);
        double w = g.wt(i) * g.wt(j) * h2;
        row_mass[i] += w * det;
        row_can[i] += w * std::exp(-c);
      }
    });
    for (int i = 0; i < g.m; ++i) {
      f.ma_mass += row_mass[i];
      can_mass += row_can[i];
      f.min_det = std::min(f.min_det, row_min[i]);
    }
  }
  f.log_norm = std::log(f.ma_mass / can_mass);
  // e^rho = e^(c - psi) / det
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i)
      f.erho[i] = std::exp(f.log_norm - psi.psi(i)) / f.det[i];
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j) {
        std::size_t idx = g.at(i, j);
        f.erho[idx] = std::exp(f.log_norm - psi.psi(i, j)) / f.det[idx];
      }
  }
  return f;
}

namespace {

// High-accuracy Hessian for the standalone diagnostic: fourth-order
// Richardson combination of the h and 2h central stencils, with cubic
// extrapolation ghosts so external closed-form potentials are not polluted
// by the Neumann reflection at the box edge.
struct DiagnosticHessian {
  const ConvexPotential& psi;
  explicit DiagnosticHessian(const ConvexPotential& p) : psi(p) {}

  double value(int i, int j) const {
    const int mm = psi.grid.m;
    auto inside = [&](int k) { return k >= 0 && k < mm; };
    if (inside(i) && inside(j)) return psi.ref_ext_interior_[psi.grid.at(i, j)] + psi.u[psi.grid.at(i, j)];
    // quintic extrapolation of u beyond the box, reference still analytic
    auto uval = [&](int a, int b) { return psi.u[psi.grid.at(a, b)]; };
    auto uext = [&](int k, auto&& fetch) {
      if (k >= 0 && k < mm) return fetch(k);
      // degree-5 fits at the six nearest nodes, depth 1 or 2
      auto combine = [&](bool low, const double* w) {
        double acc = 0;
        for (int s = 0; s < 6; ++s) acc += w[s] * fetch(low ? s : mm - 1 - s);
        return acc;
      };
      static constexpr double kDepth1[6] = {6, -15, 20, -15, 6, -1};
      static constexpr double kDepth2[6] = {21, -70, 105, -84, 35, -6};
      bool low = k < 0;
      int depth = low ? -k : k - (mm - 1);
      return combine(low, depth == 1 ? kDepth1 : kDepth2);
    };
    double u;
    if (inside(j)) {
      u = uext(i, [&](int a) { return uval(a, j); });
    } else if (inside(i)) {
      u = uext(j, [&](int b) { return uval(i, b); });
    } else {
      // corner: extrapolate along the first axis of row-extrapolated values
      u = uext(i, [&](int a) { return uext(j, [&](int b) { return uval(a, b); }); });
    }
    double x[2] = {psi.grid.coord(i), psi.grid.coord(j)};
    return psi.grid.n == 1 ? (*psi.ref)(&x[0]) + u : (*psi.ref)(x) + u;
  }

  double second(int i, int j, int di, int dj, double h2) const {
    double c = value(i, j);
    double d1 = (value(i + di, j + dj) - 2 * c + value(i - di, j - dj)) / h2;
    double d2 = (value(i + 2 * di, j + 2 * dj) - 2 * c + value(i - 2 * di, j - 2 * dj)) / (4 * h2);
    return (4 * d1 - d2) / 3;
  }
  double mixed(int i, int j, double h2) const {
    auto cross = [&](int s) {
      return (value(i + s, j + s) + value(i - s, j - s) - value(i + s, j - s) -
              value(i - s, j + s)) /
             (4.0 * s * s * h2);
    };
    return (4 * cross(1) - cross(2)) / 3;
  }
};

}  // namespace

std::vector<double> ricci_potential(const ConvexPotential& psi) {
  const Grid& g = psi.grid;
  const double h2 = g.h * g.h;
  DiagnosticHessian hess(psi);
  std::vector<double> logdet(g.size());
  double min_det = 1e300;
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i) {
      double det = hess.second(i, 0, 1, 0, h2);
      min_det = std::min(min_det, det);
      logdet[i] = det > 0 ? std::log(det) : 0;
    }
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j) {
        double det = hess.second(i, j, 1, 0, h2) * hess.second(i, j, 0, 1, h2) -
                     hess.mixed(i, j, h2) * hess.mixed(i, j, h2);
        min_det = std::min(min_det, det);
        logdet[g.at(i, j)] = det > 0 ? std::log(det) : 0;
      }
  }
  if (min_det <= 0)
    fail(Errc::degenerate_hessian, "ricci_potential: Hessian determinant <= 0 at a node");

  // normalize so that int (e^rho - 1) MA = 0
  std::vector<double> raw(g.size());
  double z_ma = 0, z_can = 0;
  auto visit = [&](std::size_t idx, double w, double psival) {
    raw[idx] = -psival - logdet[idx];
    z_ma += w * std::exp(logdet[idx]);
    z_can += w * std::exp(-psival);
  };
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i)
      visit(g.at(i), g.wt(i) * g.h, psi.ref_ext_interior_[g.at(i)] + psi.u[g.at(i)]);
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j)
        visit(g.at(i, j), g.wt(i) * g.wt(j) * g.h * g.h,
              psi.ref_ext_interior_[g.at(i, j)] + psi.u[g.at(i, j)]);
  }
  double c = std::log(z_ma / z_can);
  for (double& v : raw) v += c;
  return raw;
}

double sup_residual(const ConvexPotential& psi, const Fields& f, const DirectionD& eta) {
  const Grid& g = psi.grid;
  double worst = 0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    double grad[2] = {f.g1[idx], g.n == 2 ? f.g2[idx] : 0.0};
    double r = f.erho[idx] - 1 - eta.h(grad);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double jt_translate_min(const NumericModel& model, const ConvexPotential& psi, double e_value,
                        std::vector<double>& a) {
  const Grid& g = psi.grid;
  if (a.empty()) a.assign(g.n, 0.0);

  auto j_of = [&](const std::vector<double>& shift) {
    // J(psi(. - a)) = sup_x [psi(x - a) - psi0(x)] - E(psi) + <a, barycenter>;
    // the E shift is exact: translating moves the averaged energy by the
    // pairing with the barycenter of P.
    double sup = -1e300;
    if (g.n == 1) {
      for (int i = 0; i < g.m; ++i) {
        double x = g.coord(i) - shift[0];
        double v = (*psi.ref)(&x) + interp_u(psi, &x) - psi.ref_ext_interior_[g.at(i)];
        sup = std::max(sup, v);
      }
    } else {
      for (int i = 0; i < g.m; ++i)
        for (int j = 0; j < g.m; ++j) {
          double x[2] = {g.coord(i) - shift[0], g.coord(j) - shift[1]};
          double v = (*psi.ref)(x) + interp_u(psi, x) - psi.ref_ext_interior_[g.at(i, j)];
          sup = std::max(sup, v);
        }
    }
    double pair = 0;
    for (int d = 0; d < g.n; ++d) pair += shift[d] * model.barycenter[d];
    return sup - e_value + pair;
  };

  const double golden = 0.6180339887498949;
  double best = j_of(a);
  for (int sweep = 0; sweep < 4; ++sweep) {
    for (int axis = 0; axis < g.n; ++axis) {
      // expand a bracket around the current point, then golden-section
      double step = 1.0;
      std::vector<double> probe = a;
      auto eval_at = [&](double t) {
        probe[axis] = a[axis] + t;
        return j_of(probe);
      };
      double lo = -step, hi = step;
      double flo = eval_at(lo), fhi = eval_at(hi), f0 = best;
      while (flo < f0 && lo > -64) {
        lo *= 2;
        flo = eval_at(lo);
      }
      while (fhi < f0 && hi < 64) {
        hi *= 2;
        fhi = eval_at(hi);
      }
      double x1 = lo + (1 - golden) * (hi - lo), x2 = lo + golden * (hi - lo);
      double f1 = eval_at(x1), f2 = eval_at(x2);
      for (int it = 0; it < 60 && hi - lo > 1e-9; ++it) {
        if (f1 <= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = lo + (1 - golden) * (hi - lo);
          f1 = eval_at(x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + golden * (hi - lo);
          f2 = eval_at(x2);
        }
      }
      double t = (f1 <= f2) ? x1 : x2;
      double ft = std::min(f1, f2);
      if (ft < best) {
        a[axis] += t;
        best = ft;
      }
    }
  }
  return best;
}

Diagnostics functionals(const NumericModel& model, const ConvexPotential& psi,
                        const DirectionD& eta, const FunctionalOptions& opt) {
  const Grid& g = psi.grid;
  Diagnostics d;

  // E and E_eta: path quadrature along psi_t = psi0 + t u.
  for (int q = 0; q < kGL; ++q) {
    PathFields pf = path_fields(psi, kGLx[q], eta);
    if (!(pf.mass > 0)) fail(Errc::quadrature_failure, "functionals: non-positive path mass");
    d.e += kGLw[q] * pf.e_num / pf.mass;
    d.e_eta += kGLw[q] * pf.e_eta_num / pf.mass;
  }

  Fields f = compute_fields(psi);
  d.ma_mass = f.ma_mass;

  // L relative to the reference.
  double can = 0, c0 = box_integral_exp_neg_ref(psi);
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i) can += g.wt(i) * g.h * std::exp(-psi.psi(i));
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j)
        can += g.wt(i) * g.wt(j) * g.h * g.h * std::exp(-psi.psi(i, j));
  }
  if (!(can > 0) || !std::isfinite(can))
    fail(Errc::quadrature_failure, "functionals: canonical mass is not finite");
  d.l = -std::log(can / c0);

  d.l0 = *std::max_element(psi.u.begin(), psi.u.end());
  d.j = d.l0 - d.e;
  d.j_eta = d.l0 - d.e_eta;
  d.d = d.l - d.e;
  d.d_eta = d.l - d.e_eta;

  // I against the reference, entropy, Ricci-Calabi, residual.
  double i_cur = 0, i_ref0 = 0, mass0 = 0, entropy = 0, rc = 0;
  PathFields ref_fields = path_fields(psi, 0.0, eta);
  mass0 = ref_fields.mass;
  i_ref0 = ref_fields.e_num;  // int u det(psi0)
  auto accumulate = [&](std::size_t idx, double w, double psival) {
    double det = f.det[idx];
    i_cur += w * psi.u[idx] * det;
    if (det > 0) entropy += w * det * (std::log(det / f.ma_mass) + psival + std::log(c0));
    double dev = f.erho[idx] - 1;
    rc += w * dev * dev * det;
  };
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i) accumulate(g.at(i), g.wt(i) * g.h, psi.ref_ext_interior_[g.at(i)]);
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j)
        accumulate(g.at(i, j), g.wt(i) * g.wt(j) * g.h * g.h,
                   psi.ref_ext_interior_[g.at(i, j)]);
  }
  d.i_ref = i_ref0 / mass0 - i_cur / f.ma_mass;
  d.h_entropy = entropy / f.ma_mass;
  d.r = rc / f.ma_mass;
  d.m_eta = d.h_entropy - d.e_eta + i_cur / f.ma_mass;
  d.residual = sup_residual(psi, f, eta);

  if (opt.with_jt) {
    std::vector<double> a = opt.jt_init;
    d.j_t = jt_translate_min(model, psi, d.e, a);
  } else {
    d.j_t = d.j;
  }
  return d;
}

}  // namespace tsol
