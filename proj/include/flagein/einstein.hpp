#pragma once

#include "flagein/flagspace.hpp"
#include "flagein/rational.hpp"

namespace flagein {

// A diagonal invariant metric x1*(-B)|m1 + x2*(-B)|m2.
struct InvariantMetric {
  Rat x1 = 1;
  Rat x2 = 1;

  InvariantMetric() = default;
  InvariantMetric(Rat a, Rat b) : x1(std::move(a)), x2(std::move(b)) {
    if (x1 <= 0 || x2 <= 0) throw Error("invariant metric requires x1 > 0 and x2 > 0");
  }
};

// The two Einstein metrics of a two-summand space, normalized at x1 = 1.
struct EinsteinSolutionSet {
  InvariantMetric kaehler;      // (1, 2)
  InvariantMetric non_kaehler;  // (1, 4 d2 / (d1 + 2 d2))
  Rat t;                        // d1 d2 / (d1 + 4 d2)
};

// t = [112] from the dimensions alone.
Rat t_closed_form(long long d1, long long d2);

// t = [112] summed from squared structure constants over the graded root
// pairs; a verification path for t_closed_form.  Each ordered pair (a, b)
// in grading[1]^2 with a+b in grading[2] contributes 2*N^2_{a,b}.
Rat t_oracle(const TwoSummandSpace& ts);

// S(g) = (d1/x1 + d2/x2)/2 - (t x2/x1^2 + 2 t/x2)/4.
Rat scalar_curvature(long long d1, long long d2, const Rat& t, const InvariantMetric& g);

// The quadratic whose positive zeros are exactly the two Einstein rays:
// 2 t d1 x1^2 - 2 d1 d2 x1^2 - t d1 x2^2 + 2 d1 d2 x1 x2 - 2 t d2 x2^2.
Rat einstein_polynomial(long long d1, long long d2, const Rat& t, const Rat& x1,
                        const Rat& x2);

EinsteinSolutionSet solve_einstein(const TwoSummandSpace& ts);

struct VolumeData {
  Rat volume;           // x1^d1 * x2^d2
  long long n;          // d1 + d2
  double kappa_approx;  // S * V^(1/n) / n: Ricci constant of the volume-1
                        // representative (display only; exact values stay
                        // in V, n and S)
};

VolumeData volume_and_constant(long long d1, long long d2, const InvariantMetric& g,
                               const Rat& S);

}  // namespace flagein
