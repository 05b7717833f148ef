#pragma once

#include <optional>
#include <string>

#include "flagein/einstein.hpp"

namespace flagein {

// An exact affine polynomial a0 + a1*c in the multiplier c.
struct AffinePoly {
  Rat a0;
  Rat a1;

  Rat eval(const Rat& c) const { return a0 + a1 * c; }
  bool operator==(const AffinePoly&) const = default;
};

enum class MetricKind { Kaehler, NonKaehler };
enum class BorderedVerdict { LocalMin, LocalMax, Saddle };
enum class OracleVerdict { LocalMin, LocalMax, Degenerate };

std::string to_string(MetricKind k);
std::string to_string(BorderedVerdict v);
std::string to_string(OracleVerdict v);

// One Einstein metric classified by both routes: the sign of the bordered
// Hessian determinant at the derived multiplier, and the sign of the exact
// second derivative of S along the constant-volume curve.
struct CriticalPointReport {
  InvariantMetric metric;
  MetricKind kind = MetricKind::Kaehler;
  Rat S;
  Rat V;
  Rat multiplier_c;
  AffinePoly hessian_poly;
  Rat hessian_value;
  BorderedVerdict bordered_verdict = BorderedVerdict::Saddle;
  Rat oracle_d2;
  OracleVerdict oracle_verdict = OracleVerdict::Degenerate;
};

// c = -S/(n V), the multiplier in grad S = c grad V at a critical point of
// S under fixed volume (forced by homogeneity: S has degree -1, V degree n).
// NotCriticalError off the Einstein rays.
Rat lagrange_multiplier(long long d1, long long d2, const Rat& t, const InvariantMetric& g);

// Determinant of the 3x3 bordered Hessian of S - c(V - 1) at g, expanded
// directly; affine in c.
AffinePoly bordered_hessian_poly(long long d1, long long d2, const Rat& t,
                                 const InvariantMetric& g);

// Closed forms for the determinant at the Kaehler point (1,2) and at the
// non-Kaehler point (1, 4d2/(d1+2d2)).  Verified against the direct
// expansion, never used in its place.
AffinePoly closed_form_kaehler(long long d1, long long d2);
AffinePoly closed_form_non_kaehler(long long d1, long long d2);

// Exact second derivative of S along the constant-volume curve through g:
// with r = d1/d2, x2' = -r x2/x1 and x2'' = r(r+1) x2/x1^2,
// D2 = S11 + 2 S12 x2' + S22 x2'^2 + S2 x2''.  Independent of the bordered
// determinant; requires S1 + S2 x2' = 0 exactly (NotCriticalError with the
// residual otherwise).
Rat constrained_second_derivative(long long d1, long long d2, const Rat& t,
                                  const InvariantMetric& g);

// Full classification of an Einstein metric of ts.  When multiplier_c is
// supplied the determinant is evaluated there instead of at the derived
// -S/(nV) (for reproducing sign discussions that assume a given c); the
// oracle route never depends on c.
CriticalPointReport classify(const TwoSummandSpace& ts, const InvariantMetric& g,
                             std::optional<Rat> multiplier_c = std::nullopt);

}  // namespace flagein
