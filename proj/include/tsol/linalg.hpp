#pragma once

#include "tsol/rational.hpp"

#include <optional>
#include <vector>

namespace tsol {

// Exact solve of a square rational system; nullopt when singular.
inline std::optional<RatVec> linsolve(std::vector<RatVec> a, RatVec b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  RatVec x(n);
  for (std::size_t c = 0; c < n; ++c) x[c] = b[c] / a[c][c];
  return x;
}

}  // namespace tsol
