#include "flagein/weights.hpp"

#include <string>

namespace flagein {

WeightVec to_weight_basis(const RootSystem& rs, const RootVec& v) {
  const int l = rs.rank();
  if (static_cast<int>(v.size()) != l)
    throw DimensionMismatchError("to_weight_basis: vector length does not match rank");
  WeightVec w(l, Rat(0));
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) w[j] += Rat(rs.cartan()[j][i]) * v[i];
  return w;
}

RootVec highest_weight(const TwoSummandSpace& ts, int n) {
  const auto& cls = grading_class(ts, n);
  const RootSystem& rs = ts.roots();
  const int i0 = ts.painted_node() - 1;
  std::vector<RootVec> maximal;
  for (const RootVec& gamma : cls) {
    bool top = true;
    for (int i = 0; i < rs.rank() && top; ++i) {
      if (i == i0) continue;
      RootVec up = gamma;
      ++up[i];
      top = !rs.is_positive_root(up);
    }
    if (top) maximal.push_back(gamma);
  }
  if (maximal.size() != 1)
    throw NotUniqueError("grading class " + std::to_string(n) + " has " +
                         std::to_string(maximal.size()) + " maximal roots; expected one");
  return maximal.front();
}

std::vector<Rat> half_sum(const RootSystem& rs, const std::vector<RootVec>& rk_plus) {
  std::vector<Rat> delta(rs.rank(), Rat(0));
  for (const RootVec& r : rk_plus)
    for (int i = 0; i < rs.rank(); ++i) delta[i] += Rat(r[i], 2);
  return delta;
}

long long weyl_dim(const RootSystem& rs, const std::vector<RootVec>& rk_plus,
                   const RootVec& lambda) {
  const auto delta = half_sum(rs, rk_plus);
  Rat dim = 1;
  for (const RootVec& alpha : rk_plus) {
    const Rat num = rs.inner_product(lambda, alpha);
    if (num < 0)
      throw NotDominantError("weyl_dim: lambda is not dominant for the subsystem");
    dim *= 1 + num / rs.inner_product_rat(delta, alpha);
  }
  if (denominator(dim) != 1 || dim <= 0)
    throw NonIntegerResultError("weyl_dim: product " + rat_str(dim) +
                                " is not a positive integer");
  return static_cast<long long>(numerator(dim));
}

}  // namespace flagein
