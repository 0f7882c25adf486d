// Exact rational scalars and small vectors used by all lattice-polytope code.
//
// Every quantity on the algebraic side of the toolkit is an mpq_rational;
// nothing here ever rounds. Vectors are tiny (ambient dimension <= 3) so a
// std::vector with value semantics is the whole story.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsol {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator*(const Rat& t, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

inline RatVec operator-(const RatVec& a) { return Rat(-1) * a; }

inline bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

// Lexicographic order; the deterministic tie-break used everywhere.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor(p/q) as an exact integer.
inline Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);  // d > 0 by canonicalization
  Int f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

// Smallest k >= 1 with k*q integral for all coordinates.
inline Int common_denominator(const RatVec& v) {
  Int l = 1;
  for (const Rat& q : v) l = lcm(l, denominator(q));
  return l;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

std::string rat_to_string(const Rat& q);

// Accepts "p/q", "p", optional sign, with whitespace trimmed.
Rat rat_from_string(const std::string& s);

}  // namespace tsol
