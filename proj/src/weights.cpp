#include "tsol/weights.hpp"

#include "tsol/errors.hpp"

#include <algorithm>

namespace tsol {

WeightSample weight_oracle(const ReflexivePolytope& p, const PLConcave& g,
                           const Direction& mu, long k) {
  if (k < 1) fail(Errc::degenerate_input, "weight_oracle: k must be positive");
  const int n = p.dim();
  WeightSample s;
  s.k = k;

  Int lambda_sum = 0;
  Int lambda_max = 0, lambda_min = 0;
  for (const std::vector<long>& chi : p.lattice_points(k)) {
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = Rat(chi[i], k);
    // k G(chi/k) is rational; the filtration weight is its floor.
    Int lambda = rat_floor(Rat(k) * g.eval(x));
    RatVec chi_q(n);
    for (int i = 0; i < n; ++i) chi_q[i] = chi[i];
    Rat mu_weight = dot(mu.mu, chi_q) + Rat(k) * mu.c;
    lambda_sum += lambda;
    if (s.count == 0) {
      lambda_max = lambda;
      lambda_min = lambda;
      s.mu_weight_min = mu_weight / Rat(k);
    } else {
      lambda_max = std::max(lambda_max, lambda);
      lambda_min = std::min(lambda_min, lambda);
      s.mu_weight_min = std::min(s.mu_weight_min, mu_weight / Rat(k));
    }
    s.pairing_sum += Rat(lambda) * mu_weight;
    ++s.count;
  }
  if (s.count == 0) fail(Errc::internal, "weight_oracle: kP has no lattice points");

  s.lambda_mean = Rat(lambda_sum) / (Rat(k) * Rat(s.count));
  s.lambda_max = Rat(lambda_max) / Rat(k);
  s.lambda_min = Rat(lambda_min) / Rat(k);
  s.pairing_sum /= Rat(k) * Rat(k) * Rat(s.count);
  return s;
}

long stabilizing_k(const PLConcave& g) {
  Int l = 1;
  for (const RatVec& w : g.vertex_set) {
    l = lcm(l, common_denominator(w));
    l = lcm(l, denominator(g.eval(w)));
  }
  return static_cast<long>(l.convert_to<long long>());
}

}  // namespace tsol
