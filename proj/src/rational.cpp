#include "tsol/rational.hpp"

#include <cctype>

namespace tsol {

std::string rat_to_string(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t = s.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = t, den = "1";
  if (std::size_t slash = t.find('/'); slash != std::string::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  Int n, d;
  try {
    n = Int(num);
    d = Int(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + t + "'");
  }
  if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(n), d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat q = Rat(n) / Rat(d);
  return q;
}

}  // namespace tsol
