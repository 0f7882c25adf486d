#pragma once

#include "tsol/rational.hpp"

namespace tsol {

// Affine form x |-> <a, x> + b on the moment space.
struct AffineForm {
  RatVec a;
  Rat b = 0;

  Rat operator()(const RatVec& x) const { return dot(a, x) + b; }

  bool operator==(const AffineForm& o) const { return a == o.a && b == o.b; }
};

inline AffineForm constant_form(std::size_t n, const Rat& c) { return {zero_vec(n), c}; }

inline AffineForm coordinate_form(std::size_t n, std::size_t i) {
  AffineForm f{zero_vec(n), Rat(0)};
  f.a[i] = 1;
  return f;
}

inline AffineForm operator+(const AffineForm& f, const AffineForm& g) {
  return {f.a + g.a, f.b + g.b};
}

}  // namespace tsol
