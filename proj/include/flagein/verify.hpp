#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagein/report.hpp"

namespace flagein {

// Closed-form (d1, d2) for a height-two painting: the classical formulas
// B: (2p(2(l-p)+1), p(p-1)), C: (4p(l-p), p(p+1)), D: (4p(l-p), p(p-1)),
// and the tabulated exceptional values.  nullopt when the node is not a
// height-two painting.
std::optional<std::pair<long long, long long>> table_dims(const LieType& t, int node);

// Exhaustive check of the graded bracket relations on the isotropy roots:
// sums of levels (1,1) land in level 2, sums of levels (1,2) and (2,2) are
// never roots, differences land in level |n-m|.  Returns the violations.
std::vector<std::string> bracket_grading_violations(const TwoSummandSpace& ts);

struct CheckResult {
  std::string name;
  long long passes = 0;
  long long failures = 0;
  std::vector<std::string> witnesses;
};

struct VerificationSummary {
  long long spaces_covered = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Sweeps every two-summand space with classical rank <= max_rank (and the
// exceptional types up to that rank) through the full battery of
// cross-checks.  max_rank >= 2.
VerificationSummary run_verification(int max_rank);

std::string render_verification_text(const VerificationSummary& s);

}  // namespace flagein
