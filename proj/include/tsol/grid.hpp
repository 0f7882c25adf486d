#pragma once

#include <cstddef>
#include <vector>

namespace tsol {

// Uniform tensor grid on the box [-R, R]^n, n = 1 or 2.
struct Grid {
  int n = 1;
  int m = 129;   // nodes per axis
  double R = 8;  // box half-width
  double h = 0;  // spacing

  Grid() = default;
  Grid(int n_, int m_, double R_) : n(n_), m(m_), R(R_), h(2 * R_ / (m_ - 1)) {}

  std::size_t size() const {
    return n == 1 ? static_cast<std::size_t>(m)
                  : static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  }
  double coord(int i) const { return -R + h * i; }
  std::size_t at(int i, int j = 0) const {
    return n == 1 ? static_cast<std::size_t>(i)
                  : static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j);
  }
  // trapezoid weight of a node index along one axis
  double wt(int i) const { return (i == 0 || i == m - 1) ? 0.5 : 1.0; }
};

}  // namespace tsol
