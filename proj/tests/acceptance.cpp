// Acceptance suite: every criterion below runs in exact rational
// arithmetic with zero tolerance and prints one pass/fail line.

#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "flagein/verify.hpp"

using namespace flagein;

namespace {

struct Criterion {
  int id;
  std::string title;
  long long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 10) failures.push_back(what);
    if (!ok && failures.size() >= 10) failures.back() = "(more failures suppressed)";
  }
};

std::vector<TwoSummandSpace> all_spaces_to_rank8() {
  std::vector<TwoSummandSpace> spaces;
  const std::vector<LieType> types = [] {
    std::vector<LieType> t{LieType('G', 2), LieType('F', 4), LieType('E', 6), LieType('E', 7),
                           LieType('E', 8)};
    for (int l = 2; l <= 8; ++l) t.emplace_back('B', l);
    for (int l = 2; l <= 8; ++l) t.emplace_back('C', l);
    for (int l = 4; l <= 8; ++l) t.emplace_back('D', l);
    return t;
  }();
  for (const LieType& t : types)
    for (TwoSummandSpace& ts : enumerate_spaces(t))
      spaces.push_back(std::move(ts));
  return spaces;
}

std::string tag(const TwoSummandSpace& ts) {
  return ts.roots().type().name() + " node " + std::to_string(ts.painted_node());
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  const auto spaces = all_spaces_to_rank8();

  {
    Criterion c{1, "exceptional dimensions match the classification table"};
    const std::map<std::pair<std::string, int>, std::pair<long long, long long>> expected = {
        {{"G2", 1}, {8, 2}},   {{"F4", 4}, {16, 14}}, {{"F4", 1}, {28, 2}},
        {{"E6", 2}, {40, 10}}, {{"E6", 6}, {40, 2}},  {{"E7", 5}, {64, 20}},
        {{"E7", 1}, {64, 2}},  {{"E7", 7}, {70, 14}}, {{"E8", 7}, {112, 2}},
        {{"E8", 1}, {128, 28}}};
    std::map<std::pair<std::string, int>, std::pair<long long, long long>> got;
    for (const LieType& t :
         {LieType('G', 2), LieType('F', 4), LieType('E', 6), LieType('E', 7), LieType('E', 8)})
      for (const auto& ts : enumerate_spaces(t, /*dedup=*/true))
        got[{t.name(), ts.painted_node()}] = {ts.d1, ts.d2};
    c.expect(got == expected, "dimension table mismatch");
    criteria.push_back(c);
  }

  {
    Criterion c{2, "classical dimensions match the closed forms"};
    for (const auto& ts : spaces) {
      const LieType& t = ts.roots().type();
      if (t.family != 'B' && t.family != 'C' && t.family != 'D') continue;
      const auto expected = table_dims(t, ts.painted_node());
      c.expect(expected && expected->first == ts.d1 && expected->second == ts.d2, tag(ts));
    }
    criteria.push_back(c);
  }

  {
    Criterion c{3, "Weyl dimension formula agrees with the root counts"};
    for (const auto& ts : spaces) {
      const long long w1 = weyl_dim(ts.roots(), ts.grading[0], highest_weight(ts, 1));
      const long long w2 = weyl_dim(ts.roots(), ts.grading[0], highest_weight(ts, 2));
      c.expect(2 * w1 == ts.d1 && 2 * w2 == ts.d2, tag(ts));
      if (ts.roots().type().name() == "G2") c.expect(w1 == 4 && w2 == 1, "G2 worked values");
      if (ts.roots().type().name() == "F4" && ts.painted_node() == 4)
        c.expect(w1 == 8 && w2 == 7, "F4 worked values");
    }
    criteria.push_back(c);
  }

  {
    Criterion c{4, "weight-basis conversions"};
    RootSystem g2(LieType('G', 2));
    c.expect(to_weight_basis(g2, {1, 0}) == WeightVec{2, -3}, "G2 alpha1");
    // alpha2 converts to -L1+2L2; the circulated -L1+3L2 contradicts the
    // Cartan matrix and the lambda1 conversion it accompanies.
    c.expect(to_weight_basis(g2, {0, 1}) == WeightVec{-1, 2}, "G2 alpha2");
    c.expect(to_weight_basis(g2, {1, 3}) == WeightVec{-1, 3}, "G2 lambda1");
    c.expect(to_weight_basis(g2, {2, 3}) == WeightVec{1, 0}, "G2 lambda2");
    RootSystem f4(LieType('F', 4));
    c.expect(to_weight_basis(f4, {1, 2, 3, 1}) == WeightVec{0, 0, 1, -1}, "F4 lambda1");
    c.expect(to_weight_basis(f4, {2, 3, 4, 2}) == WeightVec{1, 0, 0, 0}, "F4 lambda2");
    criteria.push_back(c);
  }

  {
    Criterion c{5, "structure constant t: brute-force oracle equals the closed form"};
    for (const auto& ts : spaces)
      c.expect(t_oracle(ts) == t_closed_form(ts.d1, ts.d2), tag(ts));
    for (const auto& ts : spaces)
      if (ts.roots().type().name() == "E6" && ts.painted_node() == 2)
        c.expect(t_closed_form(ts.d1, ts.d2) == 5, "E6 branch t = 5");
    criteria.push_back(c);
  }

  {
    Criterion c{6, "Einstein equation is solved exactly by both metrics"};
    for (const auto& ts : spaces) {
      const Rat t = t_closed_form(ts.d1, ts.d2);
      const auto sol = solve_einstein(ts);
      c.expect(einstein_polynomial(ts.d1, ts.d2, t, sol.kaehler.x1, sol.kaehler.x2) == 0 &&
                   einstein_polynomial(ts.d1, ts.d2, t, sol.non_kaehler.x1,
                                       sol.non_kaehler.x2) == 0,
               tag(ts));
    }
    for (int l = 2; l <= 8; ++l) {
      auto rs = std::make_shared<const RootSystem>(LieType('C', l));
      const auto ts = validate(PaintedDiagram(rs, 1));
      c.expect(solve_einstein(ts).non_kaehler.x2 == Rat(2, l),
               "C(" + std::to_string(l) + "," + std::to_string(l - 1) + ") non-Kaehler x2");
    }
    for (const auto& ts : spaces)
      if (ts.roots().type().name() == "E6" && ts.painted_node() == 2)
        c.expect(solve_einstein(ts).non_kaehler.x2 == Rat(2, 3), "E6 branch (1, 2/3)");
    criteria.push_back(c);
  }

  {
    Criterion c{7, "bordered Hessian determinant equals both closed forms"};
    for (const auto& ts : spaces) {
      const Rat t = t_closed_form(ts.d1, ts.d2);
      const auto sol = solve_einstein(ts);
      c.expect(bordered_hessian_poly(ts.d1, ts.d2, t, sol.kaehler) ==
                   closed_form_kaehler(ts.d1, ts.d2),
               tag(ts) + " Kaehler point");
      c.expect(bordered_hessian_poly(ts.d1, ts.d2, t, sol.non_kaehler) ==
                   closed_form_non_kaehler(ts.d1, ts.d2),
               tag(ts) + " non-Kaehler point");
    }
    const auto h11 = bordered_hessian_poly(40, 10, Rat(5), InvariantMetric(1, 2));
    c.expect(h11.a0 == Rat(-655360000) && h11.a1 == Rat(-655360000) * 8192,
             "E6 Kaehler |H| = -655360000 (1 + 8192 c)");
    const auto h12 = bordered_hessian_poly(40, 10, Rat(5), InvariantMetric(1, Rat(2, 3)));
    c.expect(h12.a0 == Rat(Int(-11141120000), Int(1162261467)), "E6 non-Kaehler constant");
    c.expect(h12.a1 == Rat(Int(-5368709120000), Int("22876792454961")),
             "E6 non-Kaehler c-coefficient (a circulated value is 10x larger; the "
             "determinant and the closed form agree on this one)");
    criteria.push_back(c);
  }

  {
    Criterion c{8, "both classification routes agree on every space"};
    std::mt19937 gen(20250810);
    std::uniform_int_distribution<int> d(1, 30);
    for (const auto& ts : spaces) {
      const auto sol = solve_einstein(ts);
      for (const InvariantMetric& g : {sol.kaehler, sol.non_kaehler}) {
        // classify checks S1 + S2*x2' = 0 exactly and throws otherwise
        CriticalPointReport rep = classify(ts, g);
        c.expect(rep.hessian_value != 0 && rep.oracle_d2 != 0 &&
                     rat_sign(rep.hessian_value) == -rat_sign(rep.oracle_d2),
                 tag(ts) + " sign duality");
        bool stable = true;
        for (int it = 0; it < 20; ++it) {
          const Rat s(d(gen), d(gen));
          const auto scaled = classify(ts, InvariantMetric(s * g.x1, s * g.x2));
          stable = stable && scaled.bordered_verdict == rep.bordered_verdict &&
                   scaled.oracle_verdict == rep.oracle_verdict;
        }
        c.expect(stable, tag(ts) + " verdicts under rescaling");
      }
    }
    for (const auto& ts : spaces) {
      if (ts.roots().type().name() != "E6" || ts.painted_node() != 2) continue;
      const Rat t = t_closed_form(ts.d1, ts.d2);
      c.expect(constrained_second_derivative(ts.d1, ts.d2, t, InvariantMetric(1, 2)) ==
                   Rat(-50),
               "E6 Kaehler D2 = -50");
      c.expect(constrained_second_derivative(ts.d1, ts.d2, t,
                                             InvariantMetric(1, Rat(2, 3))) == Rat(50),
               "E6 non-Kaehler D2 = +50");
    }
    criteria.push_back(c);
  }

  {
    Criterion c{9, "graded bracket relations hold exhaustively"};
    for (const auto& ts : spaces) {
      const auto violations = bracket_grading_violations(ts);
      c.expect(violations.empty(),
               tag(ts) + (violations.empty() ? "" : ": " + violations.front()));
    }
    criteria.push_back(c);
  }

  {
    Criterion c{10, "enumeration counts up to diagram automorphism"};
    c.expect(enumerate_spaces(LieType('E', 6), true).size() == 2, "E6");
    c.expect(enumerate_spaces(LieType('E', 7), true).size() == 3, "E7");
    c.expect(enumerate_spaces(LieType('E', 8), true).size() == 2, "E8");
    c.expect(enumerate_spaces(LieType('F', 4), true).size() == 2, "F4");
    c.expect(enumerate_spaces(LieType('G', 2), true).size() == 1, "G2");
    for (int l = 1; l <= 8; ++l)
      c.expect(enumerate_spaces(LieType('A', l), true).empty(), "A" + std::to_string(l));
    criteria.push_back(c);
  }

  std::cout << "note (criterion 4): alpha2 of G2 converts to -L1+2L2; a circulated value "
               "-L1+3L2 is inconsistent with the Cartan matrix and with the conversion of "
               "lambda1 = alpha1+3*alpha2 printed alongside it\n";
  std::cout << "note (criterion 7): the non-Kaehler c-coefficient for (d1,d2) = (40,10) is "
               "-5368709120000/22876792454961; a circulated value ten times larger disagrees "
               "with both the direct determinant expansion and the closed form\n";

  int failed = 0;
  for (const Criterion& c : criteria) {
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << c.checks << " checks";
    if (!ok) {
      std::cout << "; failures:";
      for (const auto& f : c.failures) std::cout << " [" << f << "]";
    }
    std::cout << ")\n";
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed"
                            : "acceptance: " + std::to_string(failed) + " criteria FAILED")
            << " over " << spaces.size() << " spaces\n";
  return failed == 0 ? 0 : 1;
}
