#include "flagein/hessian.hpp"

namespace flagein {

std::string to_string(MetricKind k) {
  return k == MetricKind::Kaehler ? "kaehler" : "non_kaehler";
}

std::string to_string(BorderedVerdict v) {
  switch (v) {
    case BorderedVerdict::LocalMin: return "LocalMin";
    case BorderedVerdict::LocalMax: return "LocalMax";
    case BorderedVerdict::Saddle: return "Saddle";
  }
  return "?";
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::LocalMin: return "LocalMin";
    case OracleVerdict::LocalMax: return "LocalMax";
    case OracleVerdict::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

// Partial derivatives of S (no multiplier terms).
struct Partials {
  Rat s1, s2, s11, s12, s22;
};

Partials partials(long long d1, long long d2, const Rat& t, const InvariantMetric& g) {
  const Rat& x1 = g.x1;
  const Rat& x2 = g.x2;
  const Rat x1_2 = x1 * x1, x1_3 = x1_2 * x1, x1_4 = x1_3 * x1;
  const Rat x2_2 = x2 * x2, x2_3 = x2_2 * x2;
  Partials p;
  p.s1 = -Rat(d1) / (2 * x1_2) + t * x2 / (2 * x1_3);
  p.s2 = (t - d2) / (2 * x2_2) - t / (4 * x1_2);
  p.s11 = Rat(d1) / x1_3 - 3 * t * x2 / (2 * x1_4);
  p.s12 = t / (2 * x1_3);
  p.s22 = (Rat(d2) - t) / x2_3;
  return p;
}

void require_on_ray(long long d1, long long d2, const Rat& t, const InvariantMetric& g,
                    const char* who) {
  if (einstein_polynomial(d1, d2, t, g.x1, g.x2) != 0)
    throw NotCriticalError(std::string(who) + ": (" + rat_str(g.x1) + ", " + rat_str(g.x2) +
                           ") does not lie on an Einstein ray");
}

}  // namespace

Rat lagrange_multiplier(long long d1, long long d2, const Rat& t, const InvariantMetric& g) {
  require_on_ray(d1, d2, t, g, "lagrange_multiplier");
  const Rat S = scalar_curvature(d1, d2, t, g);
  const Rat V = rat_pow(g.x1, d1) * rat_pow(g.x2, d2);
  return -S / (Rat(d1 + d2) * V);
}

AffinePoly bordered_hessian_poly(long long d1, long long d2, const Rat& t,
                                 const InvariantMetric& g) {
  const Rat& x1 = g.x1;
  const Rat& x2 = g.x2;
  const Partials p = partials(d1, d2, t, g);

  const Rat vx1 = Rat(d1) * rat_pow(x1, d1 - 1) * rat_pow(x2, d2);
  const Rat vx2 = Rat(d2) * rat_pow(x1, d1) * rat_pow(x2, d2 - 1);

  // Second partials of S - c(V - 1), split into constant and c parts.
  const Rat v11 = Rat(d1) * (d1 - 1) * rat_pow(x1, d1 - 2) * rat_pow(x2, d2);
  const Rat v22 = Rat(d2) * (d2 - 1) * rat_pow(x1, d1) * rat_pow(x2, d2 - 2);
  const Rat v12 = Rat(d1) * d2 * rat_pow(x1, d1 - 1) * rat_pow(x2, d2 - 1);

  // det = -vx1^2 (s22 - c v22) + 2 vx1 vx2 (s12 - c v12) - vx2^2 (s11 - c v11)
  AffinePoly h;
  h.a0 = -vx1 * vx1 * p.s22 + 2 * vx1 * vx2 * p.s12 - vx2 * vx2 * p.s11;
  h.a1 = vx1 * vx1 * v22 - 2 * vx1 * vx2 * v12 + vx2 * vx2 * v11;
  return h;
}

AffinePoly closed_form_kaehler(long long d1, long long d2) {
  const Rat lead = -Rat(d1 + d2) * d1 * d2 * rat_pow(Rat(2), 2 * d2 - 2);
  return AffinePoly{lead * Rat(d2, d1 + 4 * d2), lead * rat_pow(Rat(2), d2)};
}

AffinePoly closed_form_non_kaehler(long long d1, long long d2) {
  const Rat x2 = Rat(4 * d2) / (d1 + 2 * d2);
  const Rat lead = -Rat(d1) * rat_pow(x2, 2 * d2 - 2);
  const Rat num = Rat(d1) * d1 * d1 * d2 + 5 * Rat(d1) * d1 * d2 * d2 +
                  6 * Rat(d1) * d2 * d2 * d2 + 2 * Rat(d2) * d2 * d2 * d2;
  const Rat a0 = lead * num / (Rat(d1 + 2 * d2) * (d1 + 4 * d2));
  const Rat a1 = lead * Rat(d2) * rat_pow(x2, d2) * (d1 + d2);
  return AffinePoly{a0, a1};
}

Rat constrained_second_derivative(long long d1, long long d2, const Rat& t,
                                  const InvariantMetric& g) {
  const Partials p = partials(d1, d2, t, g);
  const Rat r = Rat(d1) / d2;
  const Rat x2p = -r * g.x2 / g.x1;                  // dx2/dx1 on V = const
  const Rat x2pp = r * (r + 1) * g.x2 / (g.x1 * g.x1);
  const Rat first = p.s1 + p.s2 * x2p;
  if (first != 0)
    throw NotCriticalError("constrained_second_derivative: first derivative along the "
                           "volume curve is " + rat_str(first) + ", not 0");
  return p.s11 + 2 * p.s12 * x2p + p.s22 * x2p * x2p + p.s2 * x2pp;
}

CriticalPointReport classify(const TwoSummandSpace& ts, const InvariantMetric& g,
                             std::optional<Rat> multiplier_c) {
  const long long d1 = ts.d1, d2 = ts.d2;
  const Rat t = t_closed_form(d1, d2);
  require_on_ray(d1, d2, t, g, "classify");

  const MetricKind kind =
      g.x2 * Rat(d1 + 2 * d2) == 4 * d2 * g.x1 ? MetricKind::NonKaehler : MetricKind::Kaehler;

  const Rat S = scalar_curvature(d1, d2, t, g);
  const Rat V = rat_pow(g.x1, d1) * rat_pow(g.x2, d2);
  const Rat c = multiplier_c ? *multiplier_c : lagrange_multiplier(d1, d2, t, g);

  const AffinePoly h = bordered_hessian_poly(d1, d2, t, g);
  const Rat hv = h.eval(c);
  const BorderedVerdict bv = hv > 0   ? BorderedVerdict::LocalMax
                             : hv < 0 ? BorderedVerdict::LocalMin
                                      : BorderedVerdict::Saddle;

  const Rat d2s = constrained_second_derivative(d1, d2, t, g);
  const OracleVerdict ov = d2s > 0   ? OracleVerdict::LocalMin
                           : d2s < 0 ? OracleVerdict::LocalMax
                                     : OracleVerdict::Degenerate;

  return CriticalPointReport{g, kind, S, V, c, h, hv, bv, d2s, ov};
}

}  // namespace flagein
