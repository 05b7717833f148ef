#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "flagein/roots.hpp"

namespace flagein {

// A Dynkin diagram with one node painted black (1-based index).
struct PaintedDiagram {
  std::shared_ptr<const RootSystem> root_system;
  int painted_index = 1;

  PaintedDiagram(std::shared_ptr<const RootSystem> rs, int node);
};

// A validated two-summand isotropy decomposition.  grading[n] collects the
// positive roots whose painted-node coefficient is n; grading[0] is the
// positive root system of K.
struct TwoSummandSpace {
  PaintedDiagram diagram;
  std::array<std::vector<RootVec>, 3> grading;
  long long d1 = 0;  // real dimension of m_1 = 2*|grading[1]|
  long long d2 = 0;  // real dimension of m_2 = 2*|grading[2]|
  std::string k_description;

  const RootSystem& roots() const { return *diagram.root_system; }
  int painted_node() const { return diagram.painted_index; }
};

// Checks the height-two criterion and builds the graded data.  Throws
// HeightNotTwoError when the painted node's mark is not 2; for the mark-1
// classical paintings the error names the Hermitian symmetric space.
TwoSummandSpace validate(const PaintedDiagram& pd);

// Stored grading class for n in {0,1,2}; BadLevelError otherwise.
const std::vector<RootVec>& grading_class(const TwoSummandSpace& ts, int n);

// One space per simple root of height two.  With dedup set, nodes related
// by a diagram automorphism are merged to the smallest representative.
std::vector<TwoSummandSpace> enumerate_spaces(const LieType& t, bool dedup = false);

// Nodes equivalent to `node` under diagram automorphisms (sorted, 1-based,
// includes the node itself).
std::vector<int> automorphism_orbit(const RootSystem& rs, int node);

// Connected component of the unpainted subdiagram, identified as a simple
// type.  Exposed for tests and the K-label builder.
struct SubdiagramComponent {
  LieType type{'A', 1};
  std::vector<int> nodes;  // 1-based, ascending
};
std::vector<SubdiagramComponent> unpainted_components(const RootSystem& rs, int painted);

}  // namespace flagein
