#include "tsol/potential.hpp"

#include "tsol/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tsol {

ReferencePotential::ReferencePotential(const ReflexivePolytope& p) : n_(p.dim()) {
  if (n_ > 2) fail(Errc::dimension_unsupported, "reference potential: grids are 1-D or 2-D");
  for (const std::vector<long>& pt : p.lattice_points(1)) {
    std::vector<double> e(pt.begin(), pt.end());
    exponents_.push_back(e);
  }
  if (exponents_.size() < 2)
    fail(Errc::degenerate_input, "reference potential: too few lattice points");
}

double ReferencePotential::operator()(const double* x) const {
  double mx = -1e300;
  for (const auto& e : exponents_) {
    double s = 0;
    for (int i = 0; i < n_; ++i) s += e[i] * x[i];
    mx = std::max(mx, s);
  }
  double acc = 0;
  for (const auto& e : exponents_) {
    double s = 0;
    for (int i = 0; i < n_; ++i) s += e[i] * x[i];
    acc += std::exp(s - mx);
  }
  return mx + std::log(acc);
}

namespace {

std::vector<double> sample_extended(const ReferencePotential& ref, const Grid& g) {
  int mm = g.m + 2;
  std::vector<double> out;
  if (g.n == 1) {
    out.resize(mm);
    for (int i = -1; i <= g.m; ++i) {
      double x = g.coord(i);
      out[static_cast<std::size_t>(i + 1)] = ref(&x);
    }
  } else {
    out.resize(static_cast<std::size_t>(mm) * mm);
    for (int i = -1; i <= g.m; ++i)
      for (int j = -1; j <= g.m; ++j) {
        double x[2] = {g.coord(i), g.coord(j)};
        out[static_cast<std::size_t>(i + 1) * mm + (j + 1)] = ref(x);
      }
  }
  return out;
}

}  // namespace

ConvexPotential make_potential(const ReflexivePolytope& p, int nodes, double box_halfwidth) {
  ConvexPotential psi;
  psi.grid = Grid(p.dim(), nodes, box_halfwidth);
  psi.ref = std::make_shared<ReferencePotential>(p);
  psi.ref_ext = sample_extended(*psi.ref, psi.grid);
  psi.u.assign(psi.grid.size(), 0.0);
  psi.ref_ext_interior_.resize(psi.grid.size());
  if (psi.grid.n == 1) {
    for (int i = 0; i < psi.grid.m; ++i) psi.ref_ext_interior_[i] = psi.ref_at(i);
  } else {
    for (int i = 0; i < psi.grid.m; ++i)
      for (int j = 0; j < psi.grid.m; ++j)
        psi.ref_ext_interior_[psi.grid.at(i, j)] = psi.ref_at(i, j);
  }
  return psi;
}

ConvexPotential with_u(const ConvexPotential& base, std::vector<double> u) {
  ConvexPotential out = base;
  out.u = std::move(u);
  return out;
}

ConvexPotential make_ray_sample(const ConvexPotential& base, const DirectionD& mu, double t) {
  ConvexPotential out = base;
  const Grid& g = base.grid;
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i) {
      double x = g.coord(i) + t * mu.mu[0];
      out.u[g.at(i)] = (*base.ref)(&x) + t * mu.c - base.ref_ext_interior_[g.at(i)];
    }
  } else {
    for (int i = 0; i < g.m; ++i)
      for (int j = 0; j < g.m; ++j) {
        double x[2] = {g.coord(i) + t * mu.mu[0], g.coord(j) + t * mu.mu[1]};
        out.u[g.at(i, j)] = (*base.ref)(x) + t * mu.c - base.ref_ext_interior_[g.at(i, j)];
      }
  }
  return out;
}

double interp_u(const ConvexPotential& psi, const double* x) {
  const Grid& g = psi.grid;
  auto clampf = [&](double t) {
    double f = (t + g.R) / g.h;
    return std::min(std::max(f, 0.0), static_cast<double>(g.m - 1));
  };
  if (g.n == 1) {
    double f = clampf(x[0]);
    int i0 = std::min(static_cast<int>(f), g.m - 2);
    double s = f - i0;
    return (1 - s) * psi.u[g.at(i0)] + s * psi.u[g.at(i0 + 1)];
  }
  double fx = clampf(x[0]), fy = clampf(x[1]);
  int i0 = std::min(static_cast<int>(fx), g.m - 2);
  int j0 = std::min(static_cast<int>(fy), g.m - 2);
  double s = fx - i0, t = fy - j0;
  return (1 - s) * (1 - t) * psi.u[g.at(i0, j0)] + s * (1 - t) * psi.u[g.at(i0 + 1, j0)] +
         (1 - s) * t * psi.u[g.at(i0, j0 + 1)] + s * t * psi.u[g.at(i0 + 1, j0 + 1)];
}

bool discretely_convex(const ConvexPotential& psi, double tol) {
  const Grid& g = psi.grid;
  if (g.n == 1) {
    for (int i = 0; i < g.m; ++i)
      if (psi.psi(i - 1) + psi.psi(i + 1) - 2 * psi.psi(i) < -tol) return false;
    return true;
  }
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.m; ++j) {
      double c = 2 * psi.psi(i, j);
      if (psi.psi(i - 1, j) + psi.psi(i + 1, j) - c < -tol) return false;
      if (psi.psi(i, j - 1) + psi.psi(i, j + 1) - c < -tol) return false;
      if (psi.psi(i - 1, j - 1) + psi.psi(i + 1, j + 1) - c < -tol) return false;
      if (psi.psi(i - 1, j + 1) + psi.psi(i + 1, j - 1) - c < -tol) return false;
    }
  return true;
}

std::vector<double> prolong_u(const ConvexPotential& coarse, const Grid& fine) {
  std::vector<double> out(fine.size());
  if (fine.n == 1) {
    for (int i = 0; i < fine.m; ++i) {
      double x = fine.coord(i);
      out[fine.at(i)] = interp_u(coarse, &x);
    }
  } else {
    for (int i = 0; i < fine.m; ++i)
      for (int j = 0; j < fine.m; ++j) {
        double x[2] = {fine.coord(i), fine.coord(j)};
        out[fine.at(i, j)] = interp_u(coarse, x);
      }
  }
  return out;
}

}  // namespace tsol
