// flagein: exact invariants of generalized flag manifolds with two
// isotropy summands - enumeration, per-diagram analysis and the
// cross-check battery.

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <string>

#include "flagein/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotTwoSummand = 3;

constexpr const char* kNodeNumbering =
    "Node numbering (as the diagrams are drawn):\n"
    "  A,B,C,D: chain 1..l left to right; B: double edge toward the short\n"
    "  root l; C: toward l-1; D: fork nodes l-1 and l both attached to l-2.\n"
    "  E6,E7,E8: long chain 1..l-1 left to right, node l attached above\n"
    "  node 3.  F4: 1-2=>3-4 (3,4 short).  G2: 1=>2 (2 short).";

char parse_family(const std::string& s) {
  if (s.size() != 1) throw flagein::InvalidTypeError(' ', 0, "family must be one letter A..G");
  return static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
}

int run(int argc, char** argv) {
  CLI::App app{"exact Einstein-metric invariants of two-summand flag manifolds"};
  app.set_version_flag("--version", "flagein 0.1.0");
  app.require_subcommand(1);

  std::string family_arg;
  int rank = 0, node = 0, max_rank = 0;
  bool dedup = false;
  std::string format = "text";

  CLI::App* list = app.add_subcommand("list", "enumerate the two-summand paintings of a type");
  list->add_option("family", family_arg, "Lie family A..G")->required();
  list->add_option("rank", rank, "rank")->required();
  list->add_flag("--dedup", dedup, "merge diagram-automorphism-equivalent nodes");
  list->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one painted diagram");
  analyze->add_option("family", family_arg, "Lie family A..G")->required();
  analyze->add_option("rank", rank, "rank")->required();
  analyze->add_option("node", node, "painted node (1-based)")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->footer(kNodeNumbering);

  CLI::App* verify = app.add_subcommand("verify", "run every cross-check up to a rank bound");
  verify->add_option("max_rank", max_rank, "sweep classical ranks up to this bound (>= 2)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) {
      const flagein::LieType t(parse_family(family_arg), rank);
      const auto rows = flagein::list_rows(t, dedup);
      if (format == "json")
        std::cout << flagein::render_list_json(t, dedup, rows);
      else if (format == "csv")
        std::cout << flagein::render_list_csv(rows);
      else
        std::cout << flagein::render_list_text(t, rows);
      return kExitOk;
    }
    if (analyze->parsed()) {
      const flagein::LieType t(parse_family(family_arg), rank);
      if (node < 1 || node > t.rank) {
        std::cerr << "error: node " << node << " out of range 1.." << t.rank << "\n";
        return kExitUsage;
      }
      const flagein::AnalysisReport r = flagein::analyze(t, node);
      std::cout << (format == "json" ? flagein::render_analysis_json(r)
                                     : flagein::render_analysis_text(r));
      return kExitOk;
    }
    // verify
    if (max_rank < 2) {
      std::cerr << "error: max_rank must be at least 2\n";
      return kExitUsage;
    }
    const flagein::VerificationSummary s = flagein::run_verification(max_rank);
    std::cout << flagein::render_verification_text(s);
    return s.all_passed() ? kExitOk : kExitVerifyFailed;
  } catch (const flagein::HeightNotTwoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotTwoSummand;
  } catch (const flagein::InvalidTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const flagein::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
