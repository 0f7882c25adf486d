// Torus-symmetric convex potentials on a truncated log-coordinate box.
//
// A metric is the convex function psi with gradient image the open moment
// polytope; we store u = psi - psi0 against the canonical reference
// psi0(x) = log sum_{u in P cap M} e^<u,x>, whose gradient image is exactly
// the interior of P. Ghost nodes extend u by even reflection (homogeneous
// Neumann) while the reference is evaluated analytically.

#pragma once

#include "tsol/direction.hpp"
#include "tsol/grid.hpp"
#include "tsol/polytope.hpp"

#include <memory>
#include <vector>

namespace tsol {

class ReferencePotential {
 public:
  explicit ReferencePotential(const ReflexivePolytope& p);

  int dim() const { return n_; }
  double operator()(const double* x) const;  // stable log-sum-exp
  double value1(double x) const { return (*this)(&x); }
  double value2(double x, double y) const {
    double q[2] = {x, y};
    return (*this)(q);
  }

 private:
  int n_ = 1;
  std::vector<std::vector<double>> exponents_;
};

// Real form of a Direction for grid-side code.
struct DirectionD {
  std::vector<double> mu;
  double c = 0;

  static DirectionD from(const Direction& d) {
    DirectionD out;
    for (const Rat& q : d.mu) out.mu.push_back(to_double(q));
    out.c = to_double(d.c);
    return out;
  }
  bool is_zero() const {
    if (c != 0) return false;
    for (double v : mu)
      if (v != 0) return false;
    return true;
  }
  double h(const double* grad) const {
    double s = c;
    for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * grad[i];
    return s;
  }
};

struct ConvexPotential {
  Grid grid;
  std::shared_ptr<const ReferencePotential> ref;
  std::vector<double> ref_ext;  // reference on the ghost-extended grid (m+2)^n
  std::vector<double> u;        // psi - psi0 at interior nodes

  // reference value at extended index i,j in [-1, m]
  double ref_at(int i, int j = 0) const {
    int mm = grid.m + 2;
    return grid.n == 1 ? ref_ext[static_cast<std::size_t>(i + 1)]
                       : ref_ext[static_cast<std::size_t>(i + 1) * mm + (j + 1)];
  }
  static int reflect(int i, int m) { return i < 0 ? -i : (i >= m ? 2 * (m - 1) - i : i); }
  // psi with Neumann ghosts on u
  double psi(int i, int j = 0) const {
    int ri = reflect(i, grid.m), rj = reflect(j, grid.m);
    return ref_at(i, j) + u[grid.at(ri, rj)];
  }
  double psi_at(std::size_t idx) const { return ref_ext_interior_[idx] + u[idx]; }

  std::vector<double> ref_ext_interior_;  // reference at interior nodes (cached)
};

ConvexPotential make_potential(const ReflexivePolytope& p, int nodes, double box_halfwidth);

// Same grid and reference, values of u replaced.
ConvexPotential with_u(const ConvexPotential& base, std::vector<double> u);

// Sample an analytically translated reference ray psi0(x + t mu) + t c.
ConvexPotential make_ray_sample(const ConvexPotential& base, const DirectionD& mu, double t);

// Bilinear interpolation of u at an arbitrary point (clamped to the box).
double interp_u(const ConvexPotential& psi, const double* x);

// Discrete convexity: second differences along axes and diagonals >= -tol.
bool discretely_convex(const ConvexPotential& psi, double tol);

// Prolong u to a finer grid on the same box (bilinear).
std::vector<double> prolong_u(const ConvexPotential& coarse, const Grid& fine);

}  // namespace tsol
