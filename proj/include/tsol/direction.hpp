#pragma once

#include "tsol/affine.hpp"
#include "tsol/rational.hpp"

namespace tsol {

// Element xi = (mu, c) of N_R (+) R acting with Hamiltonian h(x) = <mu, x> + c.
// The identical one-parameter subgroup is (0, 1), whose Hamiltonian is 1.
struct Direction {
  RatVec mu;
  Rat c = 0;

  AffineForm hamiltonian() const { return {mu, c}; }
  Rat h(const RatVec& x) const { return dot(mu, x) + c; }

  bool is_zero() const { return c == 0 && tsol::is_zero(mu); }

  static Direction zero(std::size_t n) { return {zero_vec(n), Rat(0)}; }
  static Direction identity(std::size_t n) { return {zero_vec(n), Rat(1)}; }

  Direction operator+(const Direction& o) const { return {mu + o.mu, c + o.c}; }
  Direction operator-() const { return {Rat(-1) * mu, -c}; }
};

}  // namespace tsol
