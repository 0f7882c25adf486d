// Inverse Monge-Ampere flow in torus-symmetric reduction, and a damped
// Newton direct solver (1-D) for the weighted equation as a cross-check.
//
// The update is psi <- psi + dt (1 + h_eta(grad psi) - e^rho): the descent of
// the modified D-energy, equal to the plain flow modulo the eta-translation
// orbit, so the soliton is a genuine fixed point instead of a traveling
// self-similar profile. At eta = 0 this is exactly psi <- psi + dt (1 - e^rho).

#pragma once

#include "tsol/functionals.hpp"

namespace tsol {

struct FlowParams {
  long max_steps = 40000;
  double dt = 0.05;
  double tol = 5e-3;
  int trace_every = 50;
  double convexity_tol = 1e-10;
  double dt_min = 1e-10;
  double safety = 0.45;  // stability fraction for the local preconditioner
};

struct FlowResult {
  ConvexPotential psi;
  bool converged = false;
  double residual = 0;
  long steps = 0;
  double dt_final = 0;
  std::vector<Diagnostics> trace;
  std::string message;
};

FlowResult flow_run(const NumericModel& model, const ConvexPotential& start,
                    const DirectionD& eta, const FlowParams& prm);

// Coarse-to-fine continuation: run the flow on each grid size in turn,
// prolonging the potential, and return the finest-level result.
FlowResult flow_cascade(const ReflexivePolytope& p, const NumericModel& model,
                        const std::vector<int>& node_ladder, double box_halfwidth,
                        const DirectionD& eta, const FlowParams& prm);

struct NewtonResult {
  ConvexPotential psi;
  bool converged = false;
  double residual = 0;
  int iterations = 0;
};

// 1-D damped Newton for e^rho = 1 + h_eta(psi'), the weighted
// Monge-Ampere form of the soliton equation.
NewtonResult newton_solve_1d(const NumericModel& model, const ConvexPotential& start,
                             const DirectionD& eta, double tol, int max_iterations = 60);

}  // namespace tsol
