#include "flagein/verify.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace flagein {

std::optional<std::pair<long long, long long>> table_dims(const LieType& t, int node) {
  const long long l = t.rank, p = node;
  switch (t.family) {
    case 'B':
      if (p < 2 || p > l) return std::nullopt;
      return std::pair{2 * p * (2 * (l - p) + 1), p * (p - 1)};
    case 'C':
      if (p < 1 || p > l - 1) return std::nullopt;
      return std::pair{4 * p * (l - p), p * (p + 1)};
    case 'D':
      if (p < 2 || p > l - 2) return std::nullopt;
      return std::pair{4 * p * (l - p), p * (p - 1)};
    default: break;
  }
  static const std::map<std::pair<std::string, int>, std::pair<long long, long long>> exc = {
      {{"G2", 1}, {8, 2}},    {{"F4", 4}, {16, 14}},  {{"F4", 1}, {28, 2}},
      {{"E6", 2}, {40, 10}},  {{"E6", 4}, {40, 10}},  {{"E6", 6}, {40, 2}},
      {{"E7", 5}, {64, 20}},  {{"E7", 1}, {64, 2}},   {{"E7", 7}, {70, 14}},
      {{"E8", 7}, {112, 2}},  {{"E8", 1}, {128, 28}},
  };
  auto it = exc.find({t.name(), node});
  if (it == exc.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> bracket_grading_violations(const TwoSummandSpace& ts) {
  std::vector<std::string> bad;
  const RootSystem& rs = ts.roots();
  const int i0 = ts.painted_node() - 1;
  auto coord_str = [](const RootVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 2; ++m) {
      for (const RootVec& alpha : ts.grading[n]) {
        for (const RootVec& beta : ts.grading[m]) {
          const RootVec sum = add(alpha, beta);
          if (rs.is_root(sum)) {
            if (n + m >= 3)
              bad.push_back("sum of levels " + std::to_string(n) + "+" + std::to_string(m) +
                            " is a root: " + coord_str(sum));
            else if (sum[i0] != n + m)
              bad.push_back("sum " + coord_str(sum) + " lands in level " +
                            std::to_string(sum[i0]));
          }
          const RootVec diff = sub(alpha, beta);
          if (rs.is_root(diff) && std::abs(diff[i0]) != std::abs(n - m))
            bad.push_back("difference " + coord_str(diff) + " outside level |" +
                          std::to_string(n) + "-" + std::to_string(m) + "|");
        }
      }
    }
  }
  return bad;
}

bool VerificationSummary::all_passed() const {
  for (const CheckResult& c : checks)
    if (c.failures > 0) return false;
  return true;
}

namespace {

struct Battery {
  CheckResult dims{"dimension_triple"};
  CheckResult oracle{"t_oracle"};
  CheckResult cf_kaehler{"hessian_closed_form_kaehler"};
  CheckResult cf_non_kaehler{"hessian_closed_form_non_kaehler"};
  CheckResult duality{"sign_duality"};
  CheckResult grading{"bracket_grading"};

  void record(CheckResult& c, bool ok, const std::string& witness) {
    if (ok) {
      ++c.passes;
    } else {
      ++c.failures;
      if (c.witnesses.size() < 20) c.witnesses.push_back(witness);
    }
  }

  void run_space(const TwoSummandSpace& ts) {
    const RootSystem& rs = ts.roots();
    const std::string tag = rs.type().name() + " node " + std::to_string(ts.painted_node());
    const long long d1 = ts.d1, d2 = ts.d2;

    // Root-count dimensions, closed forms and the Weyl formula must agree.
    {
      const auto expected = table_dims(rs.type(), ts.painted_node());
      bool ok = expected && expected->first == d1 && expected->second == d2;
      if (ok) {
        const long long w1 = weyl_dim(rs, ts.grading[0], highest_weight(ts, 1));
        const long long w2 = weyl_dim(rs, ts.grading[0], highest_weight(ts, 2));
        ok = 2 * w1 == d1 && 2 * w2 == d2;
      }
      record(dims, ok, tag + ": dims (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
    }

    const Rat t = t_closed_form(d1, d2);
    record(oracle, t_oracle(ts) == t, tag + ": oracle " + rat_str(t_oracle(ts)) +
                                          " != closed form " + rat_str(t));

    const EinsteinSolutionSet sol = solve_einstein(ts);
    record(cf_kaehler, bordered_hessian_poly(d1, d2, t, sol.kaehler) == closed_form_kaehler(d1, d2),
           tag + ": determinant at (1,2) differs from closed form");
    record(cf_non_kaehler,
           bordered_hessian_poly(d1, d2, t, sol.non_kaehler) == closed_form_non_kaehler(d1, d2),
           tag + ": determinant at the non-Kaehler point differs from closed form");

    for (const InvariantMetric& g : {sol.kaehler, sol.non_kaehler}) {
      const CriticalPointReport rep = classify(ts, g);
      const bool ok = rep.hessian_value != 0 && rep.oracle_d2 != 0 &&
                      rat_sign(rep.hessian_value) == -rat_sign(rep.oracle_d2);
      record(duality, ok, tag + " " + to_string(rep.kind) + ": |H|(c) = " +
                              rat_str(rep.hessian_value) + ", D2 = " + rat_str(rep.oracle_d2));
    }

    const auto violations = bracket_grading_violations(ts);
    record(grading, violations.empty(),
           tag + ": " + (violations.empty() ? "" : violations.front()));
  }
};

}  // namespace

VerificationSummary run_verification(int max_rank) {
  if (max_rank < 2) throw Error("verify: max_rank must be at least 2");

  std::vector<LieType> types;
  types.emplace_back('G', 2);
  if (max_rank >= 4) types.emplace_back('F', 4);
  for (int r = 6; r <= 8 && r <= max_rank; ++r) types.emplace_back('E', r);
  for (int l = 2; l <= max_rank; ++l) types.emplace_back('B', l);
  for (int l = 2; l <= max_rank; ++l) types.emplace_back('C', l);
  for (int l = 4; l <= max_rank; ++l) types.emplace_back('D', l);

  Battery battery;
  VerificationSummary summary;
  for (const LieType& t : types) {
    for (const TwoSummandSpace& ts : enumerate_spaces(t, /*dedup=*/false)) {
      ++summary.spaces_covered;
      battery.run_space(ts);
    }
  }
  summary.checks = {battery.dims, battery.oracle,  battery.cf_kaehler,
                    battery.cf_non_kaehler, battery.duality, battery.grading};
  return summary;
}

std::string render_verification_text(const VerificationSummary& s) {
  std::ostringstream os;
  os << "spaces covered: " << s.spaces_covered << "\n";
  for (const CheckResult& c : s.checks) {
    os << c.name << ": " << c.passes << " pass, " << c.failures << " fail\n";
    for (const std::string& w : c.witnesses) os << "  witness: " << w << "\n";
  }
  os << (s.all_passed() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace flagein
