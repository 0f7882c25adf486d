#include "tsol/lp.hpp"

#include "tsol/errors.hpp"
#include "tsol/linalg.hpp"

#include <limits>

namespace tsol {

namespace {

struct Tableau {
  int m, n_total;
  std::vector<RatVec> t;  // m rows of n_total coefficients
  RatVec rhs;
  std::vector<int> basis;

  void pivot(int row, int col) {
    Rat piv = t[row][col];
    for (int j = 0; j < n_total; ++j) t[row][j] /= piv;
    rhs[row] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j < n_total; ++j) t[i][j] -= f * t[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }

  // Bland's rule; `allowed` masks out columns that may not enter.
  // Returns false on optimality, throws on unbounded direction.
  bool step(const RatVec& cost, const std::vector<bool>& allowed) {
    RatVec y(m);  // multipliers of the basis rows
    for (int i = 0; i < m; ++i) y[i] = cost[basis[i]];
    int enter = -1;
    for (int j = 0; j < n_total && enter < 0; ++j) {
      if (!allowed[j]) continue;
      Rat reduced = cost[j];
      for (int i = 0; i < m; ++i) reduced -= y[i] * t[i][j];
      if (reduced > 0) enter = j;
    }
    if (enter < 0) return false;
    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) fail(Errc::unbounded, "simplex: unbounded direction");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpResult solve_lp_standard(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());

  Tableau tab;
  tab.m = m;
  tab.n_total = n + m;  // artificials appended
  tab.t.assign(m, RatVec(tab.n_total, Rat(0)));
  tab.rhs.resize(m);
  tab.basis.resize(m);
  std::vector<int> row_sign(m, 1);
  for (int i = 0; i < m; ++i) {
    Rat bi = b[i];
    int s = 1;
    if (bi < 0) {
      s = -1;
      bi = -bi;
    }
    row_sign[i] = s;
    for (int j = 0; j < n; ++j) tab.t[i][j] = Rat(s) * a[i][j];
    tab.t[i][n + i] = 1;
    tab.rhs[i] = bi;
    tab.basis[i] = n + i;
  }

  LpResult res;

  // Phase 1: drive the artificials to zero.
  RatVec phase1_cost(tab.n_total, Rat(0));
  for (int i = 0; i < m; ++i) phase1_cost[n + i] = -1;
  std::vector<bool> all_allowed(tab.n_total, true);
  while (tab.step(phase1_cost, all_allowed)) {
  }
  Rat infeas = 0;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeas += tab.rhs[i];
  if (infeas > 0) {
    res.status = LpStatus::infeasible;
    return res;
  }

  // Phase 2: artificials may stay basic at level zero but never re-enter.
  RatVec cost(tab.n_total, Rat(0));
  for (int j = 0; j < n; ++j) cost[j] = c[j];
  std::vector<bool> allowed(tab.n_total, true);
  for (int j = n; j < tab.n_total; ++j) allowed[j] = false;
  try {
    while (tab.step(cost, allowed)) {
    }
  } catch (const Error& e) {
    if (e.code() == Errc::unbounded) {
      res.status = LpStatus::unbounded;
      return res;
    }
    throw;
  }

  res.status = LpStatus::optimal;
  res.x.assign(n, Rat(0));
  res.value = 0;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs[i];
  }
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  res.basis = tab.basis;

  // Dual multipliers from the final basis: solve (SA)_B^T pi' = c_B in the
  // sign-flipped system, then undo the flip.
  std::vector<RatVec> abt(m, RatVec(m, Rat(0)));
  RatVec cb(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    int j = tab.basis[i];
    if (j < n) {
      for (int r = 0; r < m; ++r) abt[i][r] = Rat(row_sign[r]) * a[r][j];
      cb[i] = c[j];
    } else {
      abt[i][j - n] = 1;  // artificial unit column of the flipped system
      cb[i] = 0;
    }
  }
  auto pi = linsolve(abt, cb);
  if (!pi) fail(Errc::internal, "simplex: singular basis at optimum");
  res.dual.resize(m);
  for (int r = 0; r < m; ++r) res.dual[r] = Rat(row_sign[r]) * (*pi)[r];
  return res;
}

}  // namespace tsol
