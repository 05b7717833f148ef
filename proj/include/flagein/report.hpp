#pragma once

#include <string>
#include <vector>

#include "flagein/hessian.hpp"
#include "flagein/weights.hpp"

namespace flagein {

// Everything the analyze command reports for one painted diagram.
struct AnalysisReport {
  LieType type;
  int painted_node = 1;
  std::string k_label;
  std::vector<int> orbit;  // automorphism orbit of the painted node

  long long d1 = 0;
  long long d2 = 0;
  long long n = 0;
  long long dim_complex_m1 = 0;
  long long dim_complex_m2 = 0;

  Rat t_closed;
  Rat t_by_oracle;

  RootVec lambda1_root;
  WeightVec lambda1_weight;
  RootVec lambda2_root;
  WeightVec lambda2_weight;

  struct MetricReport {
    CriticalPointReport critical;
    long long n = 0;
    double kappa_approx = 0.0;
  };
  MetricReport kaehler;
  MetricReport non_kaehler;

  std::vector<std::string> notes;
};

AnalysisReport analyze(const TwoSummandSpace& ts);
AnalysisReport analyze(const LieType& t, int node);

// One row of the list command.
struct SpaceRow {
  int node = 1;
  std::string k_label;
  std::vector<int> orbit;
  long long d1 = 0;
  long long d2 = 0;
  Rat t;
  Rat x2_non_kaehler;
};

std::vector<SpaceRow> list_rows(const LieType& t, bool dedup);

// Renderers.  All rationals appear as "p" or "p/q" strings; floats occur
// only in *_approx fields.  JSON key order is fixed so output is stable
// byte for byte.
std::string render_analysis_json(const AnalysisReport& r);
std::string render_analysis_text(const AnalysisReport& r);
std::string render_list_json(const LieType& t, bool dedup, const std::vector<SpaceRow>& rows);
std::string render_list_text(const LieType& t, const std::vector<SpaceRow>& rows);
std::string render_list_csv(const std::vector<SpaceRow>& rows);

}  // namespace flagein
