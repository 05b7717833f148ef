#include <doctest.h>

#include "flagein/weights.hpp"

using namespace flagein;

namespace {

TwoSummandSpace make_space(char family, int rank, int node) {
  auto rs = std::make_shared<const RootSystem>(LieType(family, rank));
  return validate(PaintedDiagram(rs, node));
}

}  // namespace

TEST_CASE("weight-basis conversion on G2") {
  RootSystem rs(LieType('G', 2));
  CHECK(to_weight_basis(rs, {1, 0}) == WeightVec{2, -3});
  // alpha_2 = -L1 + 2 L2, forced by the Cartan matrix (its row sums against
  // the coroots) and by lambda_1 = alpha_1 + 3 alpha_2 = -L1 + 3 L2 below.
  CHECK(to_weight_basis(rs, {0, 1}) == WeightVec{-1, 2});
  CHECK(to_weight_basis(rs, {1, 3}) == WeightVec{-1, 3});
  CHECK(to_weight_basis(rs, {2, 3}) == WeightVec{1, 0});
  CHECK(to_weight_basis(rs, {0, 0}) == WeightVec{0, 0});
}

TEST_CASE("weight-basis conversion on F4") {
  RootSystem rs(LieType('F', 4));
  CHECK(to_weight_basis(rs, {0, 1, 0, 0}) == WeightVec{-1, 2, -2, 0});
  CHECK(to_weight_basis(rs, {1, 2, 3, 1}) == WeightVec{0, 0, 1, -1});
  CHECK(to_weight_basis(rs, {2, 3, 4, 2}) == WeightVec{1, 0, 0, 0});
  CHECK_THROWS_AS(to_weight_basis(rs, {1, 0}), DimensionMismatchError);
}

TEST_CASE("basis round trip recovers the Cartan rows") {
  for (const LieType& t : {LieType('B', 4), LieType('E', 6), LieType('G', 2)}) {
    RootSystem rs(t);
    for (int i = 0; i < t.rank; ++i) {
      RootVec e(t.rank, 0);
      e[i] = 1;
      const WeightVec w = to_weight_basis(rs, e);
      for (int j = 0; j < t.rank; ++j) CHECK(w[j] == Rat(rs.cartan()[j][i]));
    }
  }
}

TEST_CASE("highest weights of the graded summands") {
  const auto g2 = make_space('G', 2, 1);
  CHECK(highest_weight(g2, 1) == RootVec{1, 3});
  CHECK(highest_weight(g2, 2) == RootVec{2, 3});
  const auto f4 = make_space('F', 4, 4);
  CHECK(highest_weight(f4, 1) == RootVec{1, 2, 3, 1});
  CHECK(highest_weight(f4, 2) == RootVec{2, 3, 4, 2});
}

TEST_CASE("half sum of a subsystem pairs to one with each subsystem coroot") {
  for (const LieType& t : {LieType('F', 4), LieType('E', 6), LieType('B', 5)}) {
    for (const auto& ts : enumerate_spaces(t)) {
      const auto& rk = ts.grading[0];
      const auto delta = half_sum(ts.roots(), rk);
      const RootSystem& rs = ts.roots();
      for (int i = 0; i < rs.rank(); ++i) {
        if (i == ts.painted_node() - 1) continue;
        RootVec e(rs.rank(), 0);
        e[i] = 1;
        // skip simple roots outside the subsystem span (always painted here)
        CHECK(2 * rs.inner_product_rat(delta, e) / rs.inner_product(e, e) == Rat(1));
      }
    }
  }
}

TEST_CASE("Weyl dimensions of the worked cases") {
  const auto g2 = make_space('G', 2, 1);
  CHECK(weyl_dim(g2.roots(), g2.grading[0], highest_weight(g2, 1)) == 4);
  CHECK(weyl_dim(g2.roots(), g2.grading[0], highest_weight(g2, 2)) == 1);
  const auto f4 = make_space('F', 4, 4);
  CHECK(f4.grading[0].size() == 9);
  CHECK(weyl_dim(f4.roots(), f4.grading[0], highest_weight(f4, 1)) == 8);
  CHECK(weyl_dim(f4.roots(), f4.grading[0], highest_weight(f4, 2)) == 7);
}

TEST_CASE("trivial weight has dimension one") {
  const auto f4 = make_space('F', 4, 4);
  CHECK(weyl_dim(f4.roots(), f4.grading[0], RootVec{0, 0, 0, 0}) == 1);
}

TEST_CASE("non-dominant weights are rejected") {
  const auto f4 = make_space('F', 4, 4);
  RootVec lam(4, 0);
  lam[0] = -1;
  CHECK_THROWS_AS(weyl_dim(f4.roots(), f4.grading[0], lam), NotDominantError);
}

TEST_CASE("Weyl dimension equals the root count of each summand") {
  for (const LieType& t : {LieType('E', 7), LieType('B', 6), LieType('C', 6), LieType('D', 6)}) {
    for (const auto& ts : enumerate_spaces(t)) {
      CHECK(weyl_dim(ts.roots(), ts.grading[0], highest_weight(ts, 1)) ==
            static_cast<long long>(ts.grading[1].size()));
      CHECK(weyl_dim(ts.roots(), ts.grading[0], highest_weight(ts, 2)) ==
            static_cast<long long>(ts.grading[2].size()));
    }
  }
}
