#include "flagein/einstein.hpp"

#include <cassert>
#include <cmath>

namespace flagein {

Rat t_closed_form(long long d1, long long d2) {
  return Rat(d1) * d2 / (d1 + 4 * d2);
}

Rat t_oracle(const TwoSummandSpace& ts) {
  const RootSystem& rs = ts.roots();
  const auto& level1 = ts.grading[1];
  const int i0 = ts.painted_node() - 1;
  Rat sum = 0;
  for (const RootVec& alpha : level1) {
    for (const RootVec& beta : level1) {
      const RootVec gamma = add(alpha, beta);
      if (gamma[i0] != 2 || !rs.is_positive_root(gamma)) continue;
      sum += 2 * rs.structure_constant_sq(alpha, beta);
    }
  }
  return sum;
}

Rat scalar_curvature(long long d1, long long d2, const Rat& t, const InvariantMetric& g) {
  const Rat& x1 = g.x1;
  const Rat& x2 = g.x2;
  return (Rat(d1) / x1 + Rat(d2) / x2) / 2 - (t * x2 / (x1 * x1) + 2 * t / x2) / 4;
}

Rat einstein_polynomial(long long d1, long long d2, const Rat& t, const Rat& x1,
                        const Rat& x2) {
  return 2 * t * d1 * x1 * x1 - 2 * Rat(d1) * d2 * x1 * x1 - t * d1 * x2 * x2 +
         2 * Rat(d1) * d2 * x1 * x2 - 2 * t * d2 * x2 * x2;
}

EinsteinSolutionSet solve_einstein(const TwoSummandSpace& ts) {
  const long long d1 = ts.d1, d2 = ts.d2;
  const Rat t = t_closed_form(d1, d2);
  EinsteinSolutionSet sol{InvariantMetric(1, 2),
                          InvariantMetric(1, Rat(4 * d2) / (d1 + 2 * d2)), t};
  assert(einstein_polynomial(d1, d2, t, sol.kaehler.x1, sol.kaehler.x2) == 0);
  assert(einstein_polynomial(d1, d2, t, sol.non_kaehler.x1, sol.non_kaehler.x2) == 0);
  return sol;
}

VolumeData volume_and_constant(long long d1, long long d2, const InvariantMetric& g,
                               const Rat& S) {
  VolumeData v;
  v.volume = rat_pow(g.x1, d1) * rat_pow(g.x2, d2);
  v.n = d1 + d2;
  // V^(1/n) through logarithms; V itself can leave double range.
  const double log_v = static_cast<double>(d1) * std::log(rat_double(g.x1)) +
                       static_cast<double>(d2) * std::log(rat_double(g.x2));
  v.kappa_approx = rat_double(S) * std::exp(log_v / static_cast<double>(v.n)) /
                   static_cast<double>(v.n);
  return v;
}

}  // namespace flagein
