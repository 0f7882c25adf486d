#include "tsol/flow.hpp"

#include "tsol/errors.hpp"
#include "tsol/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace tsol {

namespace {

// (I - beta d^2)x = rhs on a Neumann-folded line: beta per node, second
// difference with ghost reflection at both ends.
void tridiag_solve_folded(const std::vector<double>& beta, const std::vector<double>& rhs,
                          std::vector<double>& x, double h2, std::vector<double>& sub,
                          std::vector<double>& diag, std::vector<double>& sup,
                          std::vector<double>& work) {
  const int m = static_cast<int>(rhs.size());
  for (int i = 0; i < m; ++i) {
    double b = beta[i] / h2;
    sub[i] = -b;
    diag[i] = 1 + 2 * b;
    sup[i] = -b;
  }
  sup[0] += sub[0];
  sub[0] = 0;
  sub[m - 1] += sup[m - 1];
  sup[m - 1] = 0;
  work = rhs;
  for (int i = 1; i < m; ++i) {
    double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    work[i] -= w * work[i - 1];
  }
  x[m - 1] = work[m - 1] / diag[m - 1];
  for (int i = m - 2; i >= 0; --i) x[i] = (work[i] - sup[i] * x[i + 1]) / diag[i];
}

}  // namespace

FlowResult flow_run(const NumericModel& model, const ConvexPotential& start,
                    const DirectionD& eta, const FlowParams& prm) {
  FlowResult res;
  res.psi = start;
  ConvexPotential& psi = res.psi;
  const Grid& g = psi.grid;
  const double h2 = g.h * g.h;
  const int m = g.m;

  double dt = prm.dt;
  double t = 0;
  std::vector<double> best_u = psi.u;
  double best_residual = 1e300;

  auto trace_point = [&](double when, double residual) {
    FunctionalOptions opt;
    opt.with_jt = false;
    Diagnostics d = functionals(model, psi, eta, opt);
    d.t = when;
    d.residual = residual;
    res.trace.push_back(d);
  };

  std::vector<double> velocity(g.size()), delta(g.size()), beta(m), rhs(m), line(m);
  std::vector<double> sub(m), diag(m), sup(m), work(m);
  std::vector<double> saved;

  long step = 0;
  for (; step < prm.max_steps; ++step) {
    Fields f = compute_fields(psi);
    if (f.min_det <= 0) {
      psi.u = best_u;
      dt *= 0.5;
      if (dt < prm.dt_min) {
        res.message = "Hessian degenerated below the time-step floor";
        break;
      }
      continue;
    }
    double residual = sup_residual(psi, f, eta);
    if (residual < best_residual) {
      best_residual = residual;
      best_u = psi.u;
    }
    if (step % prm.trace_every == 0) trace_point(t, residual);
    if (residual < prm.tol) {
      res.converged = true;
      break;
    }

    for (std::size_t idx = 0; idx < g.size(); ++idx) {
      double grad[2] = {f.g1[idx], g.n == 2 ? f.g2[idx] : 0.0};
      velocity[idx] = 1.0 + eta.h(grad) - f.erho[idx];
    }

    // Linearized semi-implicit step: backward Euler on the second-order
    // part e^rho tr((D^2 psi)^{-1} D^2 .), directional sweeps in 2-D.
    bool accepted = false;
    while (!accepted) {
      if (g.n == 1) {
        for (int i = 0; i < m; ++i) {
          beta[i] = dt * f.erho[i] / f.det[i];
          rhs[i] = dt * velocity[i];
        }
        tridiag_solve_folded(beta, rhs, delta, h2, sub, diag, sup, work);
      } else {
        // sweep along axis 1 rows, then axis 2 columns (Douglas splitting)
        std::vector<double> half(g.size());
        for (int j = 0; j < m; ++j) {
          for (int i = 0; i < m; ++i) {
            std::size_t idx = g.at(i, j);
            beta[i] = dt * f.erho[idx] * f.h22[idx] / f.det[idx];
            rhs[i] = dt * velocity[idx];
          }
          tridiag_solve_folded(beta, rhs, line, h2, sub, diag, sup, work);
          for (int i = 0; i < m; ++i) half[g.at(i, j)] = line[i];
        }
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < m; ++j) {
            std::size_t idx = g.at(i, j);
            beta[j] = dt * f.erho[idx] * f.h11[idx] / f.det[idx];
            rhs[j] = half[idx];
          }
          tridiag_solve_folded(beta, rhs, line, h2, sub, diag, sup, work);
          for (int j = 0; j < m; ++j) delta[g.at(i, j)] = line[j];
        }
      }
      saved = psi.u;
      for (std::size_t idx = 0; idx < g.size(); ++idx) psi.u[idx] += delta[idx];
      if (discretely_convex(psi, prm.convexity_tol)) {
        accepted = true;
      } else {
        psi.u = saved;
        dt *= 0.5;
        if (dt < prm.dt_min) break;
      }
    }
    if (!accepted) {
      res.message = "discrete convexity could not be maintained at the time-step floor";
      break;
    }
    t += dt;
  }

  res.steps = step;
  res.dt_final = dt;
  if (!res.converged) {
    psi.u = best_u;
    res.residual = best_residual;
    if (res.message.empty()) res.message = "step limit reached";
  } else {
    Fields f = compute_fields(psi);
    res.residual = sup_residual(psi, f, eta);
  }
  trace_point(t, res.residual);
  return res;
}

FlowResult flow_cascade(const ReflexivePolytope& p, const NumericModel& model,
                        const std::vector<int>& node_ladder, double box_halfwidth,
                        const DirectionD& eta, const FlowParams& prm) {
  FlowResult last;
  ConvexPotential psi = make_potential(p, node_ladder.front(), box_halfwidth);
  for (std::size_t level = 0; level < node_ladder.size(); ++level) {
    if (level > 0) {
      ConvexPotential fine = make_potential(p, node_ladder[level], box_halfwidth);
      fine.u = prolong_u(psi, fine.grid);
      psi = std::move(fine);
    }
    FlowParams level_prm = prm;
    if (level + 1 < node_ladder.size()) {
      // intermediate levels only rough in the shape; the discretization
      // floor of a coarse grid can sit above the final tolerance
      level_prm.tol = std::max(prm.tol, 0.25 * psi.grid.h);
      level_prm.max_steps = std::min<long>(prm.max_steps, 3000);
      level_prm.trace_every = prm.trace_every * 4;
    }
    last = flow_run(model, psi, eta, level_prm);
    psi = last.psi;
  }
  return last;
}

NewtonResult newton_solve_1d(const NumericModel& model, const ConvexPotential& start,
                             const DirectionD& eta, double tol, int max_iterations) {
  (void)model;
  NewtonResult res;
  res.psi = start;
  ConvexPotential& psi = res.psi;
  const Grid& g = psi.grid;
  if (g.n != 1) fail(Errc::dimension_unsupported, "newton_solve_1d: 1-D only");
  const int m = g.m;
  const double h2 = g.h * g.h;
  const double mu = eta.mu.empty() ? 0.0 : eta.mu[0];

  auto residual_field = [&](std::vector<double>& r) {
    Fields f = compute_fields(psi);
    if (f.min_det <= 0) fail(Errc::degenerate_hessian, "newton_solve_1d: lost convexity");
    double worst = 0;
    for (int i = 0; i < m; ++i) {
      double weight = 1 + eta.c + mu * f.g1[i];
      if (weight <= 0)
        fail(Errc::quadrature_failure, "newton_solve_1d: weight 1 + h_eta is not positive");
      // log form of e^rho = 1 + h_eta
      r[i] = (f.log_norm - psi.psi(i) - std::log(f.det[i])) - std::log(weight);
      worst = std::max(worst, std::abs(f.erho[i] - 1 - eta.h(&f.g1[i])));
    }
    return worst;
  };

  std::vector<double> r(m), sub(m), diag(m), sup(m), rhs(m), delta(m);
  double current = residual_field(r);
  for (res.iterations = 0; res.iterations < max_iterations; ++res.iterations) {
    if (current < tol) {
      res.converged = true;
      break;
    }
    Fields f = compute_fields(psi);
    for (int i = 0; i < m; ++i) {
      double det = f.det[i];
      double weight = 1 + eta.c + mu * f.g1[i];
      // d r_i / d psi_j with the normalization constant frozen
      double a = -1.0 / (det * h2) + mu / (weight * 2 * g.h);   // j = i-1
      double b = 2.0 / (det * h2);                              // j = i
      double c = -1.0 / (det * h2) - mu / (weight * 2 * g.h);   // j = i+1
      sub[i] = a;
      diag[i] = b - 1.0;
      sup[i] = c;
      if (i == 0) {
        sup[i] += a;
        sub[i] = 0;
      }
      if (i == m - 1) {
        sub[i] += c;
        sup[i] = 0;
      }
      rhs[i] = -r[i];
    }
    for (int i = 1; i < m; ++i) {
      double w = sub[i] / diag[i - 1];
      diag[i] -= w * sup[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    delta[m - 1] = rhs[m - 1] / diag[m - 1];
    for (int i = m - 2; i >= 0; --i) delta[i] = (rhs[i] - sup[i] * delta[i + 1]) / diag[i];

    double alpha = 1.0;
    std::vector<double> saved = psi.u;
    bool moved = false;
    while (alpha > 1e-8) {
      for (int i = 0; i < m; ++i) psi.u[i] = saved[i] + alpha * delta[i];
      bool usable = discretely_convex(psi, 1e-12);
      double next = 1e300;
      if (usable) {
        try {
          next = residual_field(r);
        } catch (const Error&) {
          next = 1e300;
        }
      }
      if (next < current) {
        current = next;
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) {
      psi.u = saved;
      current = residual_field(r);
      break;
    }
  }
  res.residual = current;
  return res;
}

}  // namespace tsol
