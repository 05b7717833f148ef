#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagein/errors.hpp"
#include "flagein/rational.hpp"

namespace flagein {

// A simple Lie type: one of A_l (l>=1), B_l (l>=2), C_l (l>=2), D_l (l>=4),
// E_6..E_8, F_4, G_2.  Isomorphic low-rank duplicates (B1, C1, D2, D3) are
// rejected with a message naming the canonical type.
struct LieType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  LieType() = default;
  LieType(char f, int r);

  std::string name() const;  // e.g. "E6"
};

// A root written over the simple-root basis.  Valid roots have all
// coefficients >= 0 (positive) or all <= 0 (negative).
using RootVec = std::vector<int>;

RootVec add(const RootVec& a, const RootVec& b);
RootVec sub(const RootVec& a, const RootVec& b);
RootVec negate(const RootVec& a);
int height(const RootVec& a);

// Root data of a simple Lie type over exact rationals.  Immutable after
// construction; safe to share across threads.
class RootSystem {
 public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // cartan()[i][j] = 2(a_i,a_j)/(a_i,a_i), 0-based.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // d_i with d_i*cartan[i][j] symmetric and max_i 2*d_i = 2.
  const std::vector<Rat>& symmetrizer() const { return symmetrizer_; }

  // Positive roots ordered by (height, lexicographic coords).
  const std::vector<RootVec>& positive_roots() const { return positive_; }

  const RootVec& highest_root() const { return highest_; }

  // Coefficients of the highest root (1-based node i is marks()[i-1]).
  const std::vector<int>& marks() const { return marks_; }

  // k with (x,y)_Killing = <x,y>/k.  Computed from the root system itself:
  // k = sum_{g in R} <theta,g>^2 / <theta,theta>.
  const Rat& killing_scale() const { return killing_scale_; }

  bool is_positive_root(const RootVec& v) const;
  bool is_root(const RootVec& v) const;

  // <l,m> = sum l_i m_j d_i a_ij; exact and symmetric.
  Rat inner_product(const RootVec& lambda, const RootVec& mu) const;
  // Same form with rational left argument (half sums of roots).
  Rat inner_product_rat(const std::vector<Rat>& lambda, const RootVec& mu) const;

  // sum_j a_ij v_j = pairing of v with the i-th simple coroot (0-based i).
  long long coroot_pairing(int i, const RootVec& v) const;

  // The alpha-string through beta: p = max{k : beta-k*alpha in R},
  // q = max{k : beta+k*alpha in R}.  Requires beta != +-alpha.
  std::pair<int, int> root_string(const RootVec& alpha, const RootVec& beta) const;

  // Squared structure constant N^2_{alpha,beta} in the normalization
  // B(E_a,E_{-a}) = -1: q(1+p)(alpha,alpha)_Killing / 2, and 0 when
  // alpha+beta is not a root.  The /2 is pinned by the G2 calibration
  // t_oracle = t_closed_form = 1 (see tests).
  Rat structure_constant_sq(const RootVec& alpha, const RootVec& beta) const;

 private:
  void check_length(size_t n) const;

  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> symmetrizer_;
  std::vector<std::vector<Rat>> sym_form_;  // d_i * a_ij
  std::vector<RootVec> positive_;
  RootVec highest_;
  std::vector<int> marks_;
  Rat killing_scale_;
};

// Number of positive roots of a valid type (closed form, used as a
// cross-check against the saturation).
long long positive_root_count(const LieType& t);

}  // namespace flagein
