// Archimedean energies, the Ricci potential, and the soliton residual on
// grid potentials.
//
// Conventions: the Monge-Ampere measure is det D^2 psi dx self-normalized on
// the truncated box; the canonical measure is e^{-psi} dx / int e^{-psi};
// the reference potential fixes E(psi0) = L(psi0) = 0.

#pragma once

#include "tsol/potential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsol {

struct NumericModel {
  double volume = 0;
  std::vector<double> barycenter;
};

NumericModel numeric_model(const ReflexivePolytope& p);

struct Fields {
  std::vector<double> det;   // Hessian determinant
  std::vector<double> erho;  // e^rho with the zero-average normalization
  std::vector<double> g1, g2;
  std::vector<double> h11, h22, h12;
  double log_norm = 0;  // c in e^rho = e^(c - psi)/det
  double min_det = 0;
  double ma_mass = 0;  // int det dx over the box
};

Fields compute_fields(const ConvexPotential& psi);

// rho with int (e^rho - 1) MA = 0; throws DegenerateHessian on det <= 0.
std::vector<double> ricci_potential(const ConvexPotential& psi);

double sup_residual(const ConvexPotential& psi, const Fields& f, const DirectionD& eta);

struct Diagnostics {
  double t = 0;
  double e = 0, e_eta = 0;
  double l = 0, l0 = 0;
  double d = 0, d_eta = 0;
  double j = 0, j_eta = 0, j_t = 0;
  double i_ref = 0;
  double r = 0;          // Ricci-Calabi (squared L^2 norm of e^rho - 1)
  double h_entropy = 0;  // relative entropy of MA against the reference canonical measure
  double m_eta = 0;      // modified K-energy
  double residual = 0;   // sup |e^rho - 1 - h_eta(grad psi)|
  double ma_mass = 0;
};

struct FunctionalOptions {
  bool with_jt = true;
  std::vector<double> jt_init;  // warm start for the torus minimization
};

Diagnostics functionals(const NumericModel& model, const ConvexPotential& psi,
                        const DirectionD& eta, const FunctionalOptions& opt = {});

// J of the translated potential, minimized over the torus orbit by
// coordinate descent (golden section per axis). Returns the minimum and the
// minimizing translation.
double jt_translate_min(const NumericModel& model, const ConvexPotential& psi, double e_value,
                        std::vector<double>& a);

}  // namespace tsol
