#pragma once

#include <vector>

#include "flagein/flagspace.hpp"
#include "flagein/roots.hpp"

namespace flagein {

// Coordinates over the fundamental-weight basis.
using WeightVec = std::vector<Rat>;

// Rewrites a vector from the simple-root basis into the fundamental-weight
// basis: the j-th coordinate is sum_i a_ji v_i.
WeightVec to_weight_basis(const RootSystem& rs, const RootVec& v);

// The unique root in grading[n] that stays maximal under addition of every
// unpainted simple root; the highest weight of the summand m_n.
RootVec highest_weight(const TwoSummandSpace& ts, int n);

// Weyl dimension formula over the positive subsystem rk_plus:
// prod (1 + <lambda,a>/<delta,a>) with delta the half sum of rk_plus.
// Exact; the result must come out a positive integer.
long long weyl_dim(const RootSystem& rs, const std::vector<RootVec>& rk_plus,
                   const RootVec& lambda);

// Half sum of the given positive roots, in simple-root coordinates.
std::vector<Rat> half_sum(const RootSystem& rs, const std::vector<RootVec>& rk_plus);

}  // namespace flagein
