#include "flagein/report.hpp"

#include <json.hpp>

#include <array>
#include <iomanip>
#include <sstream>

namespace flagein {

namespace {

using ordered_json = nlohmann::ordered_json;

long long weight_int(const Rat& w) {
  if (denominator(w) != 1)
    throw NonIntegerResultError("weight coordinate " + rat_str(w) + " is not an integer");
  return static_cast<long long>(numerator(w));
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

AnalysisReport::MetricReport make_metric_report(const TwoSummandSpace& ts,
                                                const InvariantMetric& g) {
  AnalysisReport::MetricReport m{classify(ts, g), 0, 0.0};
  const VolumeData vd = volume_and_constant(ts.d1, ts.d2, g, m.critical.S);
  m.n = vd.n;
  m.kappa_approx = vd.kappa_approx;
  return m;
}

ordered_json metric_json(const AnalysisReport::MetricReport& m) {
  const CriticalPointReport& c = m.critical;
  ordered_json j;
  j["kind"] = to_string(c.kind);
  j["x1"] = rat_str(c.metric.x1);
  j["x2"] = rat_str(c.metric.x2);
  j["scalar_curvature"] = rat_str(c.S);
  j["volume"] = rat_str(c.V);
  j["n"] = m.n;
  j["kappa_approx"] = m.kappa_approx;
  j["lagrange_multiplier_c"] = rat_str(c.multiplier_c);
  j["hessian_det"] = ordered_json{{"a0", rat_str(c.hessian_poly.a0)},
                                  {"a1", rat_str(c.hessian_poly.a1)},
                                  {"value_at_c", rat_str(c.hessian_value)}};
  j["bordered_verdict"] = to_string(c.bordered_verdict);
  j["constrained_d2"] = rat_str(c.oracle_d2);
  j["oracle_verdict"] = to_string(c.oracle_verdict);
  return j;
}

void metric_text(std::ostringstream& os, const AnalysisReport::MetricReport& m) {
  const CriticalPointReport& c = m.critical;
  os << to_string(c.kind) << " metric (" << rat_str(c.metric.x1) << ", "
     << rat_str(c.metric.x2) << ")\n"
     << "  scalar curvature S = " << rat_str(c.S) << ", volume V = " << rat_str(c.V)
     << ", n = " << m.n << ", kappa_approx = " << ordered_json(m.kappa_approx).dump() << "\n"
     << "  lagrange multiplier c = " << rat_str(c.multiplier_c) << "\n"
     << "  |H| = " << rat_str(c.hessian_poly.a0) << " + (" << rat_str(c.hessian_poly.a1)
     << ")*c, |H|(c) = " << rat_str(c.hessian_value) << " -> "
     << to_string(c.bordered_verdict) << "\n"
     << "  constrained second derivative = " << rat_str(c.oracle_d2) << " -> "
     << to_string(c.oracle_verdict) << "\n";
}

}  // namespace

AnalysisReport analyze(const TwoSummandSpace& ts) {
  AnalysisReport r;
  const RootSystem& rs = ts.roots();
  r.type = rs.type();
  r.painted_node = ts.painted_node();
  r.k_label = ts.k_description;
  r.orbit = automorphism_orbit(rs, r.painted_node);

  r.d1 = ts.d1;
  r.d2 = ts.d2;
  r.n = ts.d1 + ts.d2;
  r.dim_complex_m1 = weyl_dim(rs, ts.grading[0], highest_weight(ts, 1));
  r.dim_complex_m2 = weyl_dim(rs, ts.grading[0], highest_weight(ts, 2));

  r.t_closed = t_closed_form(r.d1, r.d2);
  r.t_by_oracle = t_oracle(ts);

  r.lambda1_root = highest_weight(ts, 1);
  r.lambda1_weight = to_weight_basis(rs, r.lambda1_root);
  r.lambda2_root = highest_weight(ts, 2);
  r.lambda2_weight = to_weight_basis(rs, r.lambda2_root);

  const EinsteinSolutionSet sol = solve_einstein(ts);
  r.kaehler = make_metric_report(ts, sol.kaehler);
  r.non_kaehler = make_metric_report(ts, sol.non_kaehler);

  r.notes.push_back(
      "the multiplier c = -S/(nV) is negative at both Einstein metrics; verdicts use the "
      "computed c, not an assumed sign");
  r.notes.push_back("both classification routes agree: kaehler -> " +
                    to_string(r.kaehler.critical.bordered_verdict) + ", non_kaehler -> " +
                    to_string(r.non_kaehler.critical.bordered_verdict));
  if (r.d1 == 40 && r.d2 == 10)
    r.notes.push_back(
        "non_kaehler |H| c-coefficient is -5368709120000/22876792454961; a circulated "
        "value ten times larger disagrees with both the direct determinant expansion and "
        "the closed form");
  return r;
}

AnalysisReport analyze(const LieType& t, int node) {
  auto rs = std::make_shared<const RootSystem>(t);
  return analyze(validate(PaintedDiagram(rs, node)));
}

std::vector<SpaceRow> list_rows(const LieType& t, bool dedup) {
  std::vector<SpaceRow> rows;
  for (const TwoSummandSpace& ts : enumerate_spaces(t, dedup)) {
    SpaceRow row;
    row.node = ts.painted_node();
    row.k_label = ts.k_description;
    row.orbit = automorphism_orbit(ts.roots(), row.node);
    row.d1 = ts.d1;
    row.d2 = ts.d2;
    row.t = t_closed_form(ts.d1, ts.d2);
    row.x2_non_kaehler = Rat(4 * ts.d2) / (ts.d1 + 2 * ts.d2);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_analysis_json(const AnalysisReport& r) {
  ordered_json j;
  j["schema"] = "flagein.analyze.v1";
  j["space"] = ordered_json{{"family", std::string(1, r.type.family)},
                            {"rank", r.type.rank},
                            {"painted_node", r.painted_node},
                            {"k", r.k_label},
                            {"orbit", r.orbit}};
  j["dimensions"] = ordered_json{{"d1", r.d1},
                                 {"d2", r.d2},
                                 {"n", r.n},
                                 {"dim_complex_m1", r.dim_complex_m1},
                                 {"dim_complex_m2", r.dim_complex_m2}};
  j["structure_constant_t"] =
      ordered_json{{"closed_form", rat_str(r.t_closed)}, {"oracle", rat_str(r.t_by_oracle)}};
  auto weight_json = [](const RootVec& root, const WeightVec& weight) {
    ordered_json w;
    w["root_basis"] = root;
    std::vector<long long> wb;
    for (const Rat& x : weight) wb.push_back(weight_int(x));
    w["weight_basis"] = wb;
    return w;
  };
  j["highest_weights"] = ordered_json{{"lambda1", weight_json(r.lambda1_root, r.lambda1_weight)},
                                      {"lambda2", weight_json(r.lambda2_root, r.lambda2_weight)}};
  j["metrics"] = ordered_json::array({metric_json(r.kaehler), metric_json(r.non_kaehler)});
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string render_analysis_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "space: " << r.type.name() << " node " << r.painted_node << " (K = " << r.k_label
     << ", orbit {" << join_ints(r.orbit, ", ") << "})\n";
  os << "dimensions: d1 = " << r.d1 << ", d2 = " << r.d2 << ", n = " << r.n
     << ", dim_C m1 = " << r.dim_complex_m1 << ", dim_C m2 = " << r.dim_complex_m2 << "\n";
  os << "structure constant t: closed form " << rat_str(r.t_closed) << ", oracle "
     << rat_str(r.t_by_oracle) << "\n";
  auto weight_line = [&](const char* name, const RootVec& root, const WeightVec& weight) {
    os << name << ": root basis [";
    for (size_t i = 0; i < root.size(); ++i) os << (i ? ", " : "") << root[i];
    os << "], weight basis [";
    for (size_t i = 0; i < weight.size(); ++i) os << (i ? ", " : "") << weight_int(weight[i]);
    os << "]\n";
  };
  weight_line("lambda1", r.lambda1_root, r.lambda1_weight);
  weight_line("lambda2", r.lambda2_root, r.lambda2_weight);
  metric_text(os, r.kaehler);
  metric_text(os, r.non_kaehler);
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render_list_json(const LieType& t, bool dedup, const std::vector<SpaceRow>& rows) {
  ordered_json j;
  j["schema"] = "flagein.list.v1";
  j["family"] = std::string(1, t.family);
  j["rank"] = t.rank;
  j["dedup"] = dedup;
  ordered_json arr = ordered_json::array();
  for (const SpaceRow& r : rows) {
    arr.push_back(ordered_json{{"node", r.node},
                               {"k", r.k_label},
                               {"orbit", r.orbit},
                               {"d1", r.d1},
                               {"d2", r.d2},
                               {"t", rat_str(r.t)},
                               {"x2_non_kaehler", rat_str(r.x2_non_kaehler)}});
  }
  j["spaces"] = arr;
  return j.dump(2) + "\n";
}

std::string render_list_text(const LieType& t, const std::vector<SpaceRow>& rows) {
  std::ostringstream os;
  os << t.name() << ": " << rows.size() << (rows.size() == 1 ? " space" : " spaces") << "\n";
  if (rows.empty()) return os.str();
  std::vector<std::array<std::string, 7>> cells;
  cells.push_back({"node", "K", "orbit", "d1", "d2", "t", "x2_non_kaehler"});
  for (const SpaceRow& r : rows)
    cells.push_back({std::to_string(r.node), r.k_label, join_ints(r.orbit, "|"),
                     std::to_string(r.d1), std::to_string(r.d2), rat_str(r.t),
                     rat_str(r.x2_non_kaehler)});
  std::array<size_t, 7> width{};
  for (const auto& row : cells)
    for (size_t i = 0; i < 7; ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (size_t i = 0; i < 7; ++i) {
      os << (i ? "  " : "");
      if (i + 1 < 7)
        os << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      else
        os << row[i];  // no trailing padding
    }
    os << "\n";
  }
  return os.str();
}

std::string render_list_csv(const std::vector<SpaceRow>& rows) {
  std::ostringstream os;
  os << "node,k,orbit,d1,d2,t,x2_non_kaehler\n";
  for (const SpaceRow& r : rows)
    os << r.node << "," << r.k_label << "," << join_ints(r.orbit, "|") << "," << r.d1 << ","
       << r.d2 << "," << rat_str(r.t) << "," << rat_str(r.x2_non_kaehler) << "\n";
  return os.str();
}

}  // namespace flagein
