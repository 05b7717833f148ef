#include "flagein/roots.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace flagein {

namespace {

std::string type_str(char f, int r) { return std::string(1, f) + std::to_string(r); }

[[noreturn]] void invalid(char f, int r, const std::string& extra = "") {
  std::string msg = "invalid Lie type " + type_str(f, r);
  if (!extra.empty()) msg += ": " + extra;
  throw InvalidTypeError(f, r, msg);
}

}  // namespace

LieType::LieType(char f, int r) : family(f), rank(r) {
  switch (f) {
    case 'A':
      if (r < 1) invalid(f, r);
      break;
    case 'B':
      if (r == 1) invalid(f, r, "B1 is isomorphic to A1; use A1");
      if (r < 2) invalid(f, r);
      break;
    case 'C':
      if (r == 1) invalid(f, r, "C1 is isomorphic to A1; use A1");
      if (r < 2) invalid(f, r);
      break;
    case 'D':
      if (r == 3) invalid(f, r, "D3 is isomorphic to A3; use A3");
      if (r == 2) invalid(f, r, "D2 is A1 x A1, which is not simple");
      if (r < 2) invalid(f, r);
      break;
    case 'E':
      if (r < 6 || r > 8) invalid(f, r);
      break;
    case 'F':
      if (r != 4) invalid(f, r);
      break;
    case 'G':
      if (r != 2) invalid(f, r);
      break;
    default:
      invalid(f, r, "family must be one of A B C D E F G");
  }
}

std::string LieType::name() const { return type_str(family, rank); }

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RootVec sub(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RootVec negate(const RootVec& a) {
  RootVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

int height(const RootVec& a) {
  int h = 0;
  for (int c : a) h += c;
  return h;
}

long long positive_root_count(const LieType& t) {
  const long long l = t.rank;
  switch (t.family) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

namespace {

// Cartan matrix a_ij = 2(a_i,a_j)/(a_i,a_i).  Nodes are numbered as the
// diagrams are usually drawn: classical chains 1..l left to right (B: arrow
// toward the short root a_l; C: toward a_{l-1}; D: fork nodes l-1, l on
// node l-2); E_l: chain 1..l-1 with node l attached above node 3;
// F4: 1-2=>3-4; G2: 1=>2 with a_1 the long root.
std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
  const int l = t.rank;
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto simple_edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) simple_edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) simple_edge(i, i + 1);
      a[l - 1][l - 2] = -2;  // a_l short
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) simple_edge(i, i + 1);
      a[l - 2][l - 1] = -2;  // a_l long
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) simple_edge(i, i + 1);
      simple_edge(l - 3, l - 1);
      break;
    case 'E':
      for (int i = 0; i + 2 < l; ++i) simple_edge(i, i + 1);
      simple_edge(2, l - 1);
      break;
    case 'F':
      simple_edge(0, 1);
      simple_edge(1, 2);
      simple_edge(2, 3);
      a[2][1] = -2;  // a_3, a_4 short
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;  // a_2 short
      break;
  }
  return a;
}

}  // namespace

RootSystem::RootSystem(LieType t) : type_(t) {
  const int l = type_.rank;
  cartan_ = cartan_matrix(type_);

  // Symmetrizer: propagate d_j = d_i a_ij / a_ji along edges, then scale so
  // the long roots get squared length 2.
  symmetrizer_.assign(l, Rat(0));
  symmetrizer_[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < l; ++j) {
      if (cartan_[i][j] != 0 && i != j && symmetrizer_[j] == 0) {
        symmetrizer_[j] = symmetrizer_[i] * cartan_[i][j] / cartan_[j][i];
        todo.push_back(j);
      }
    }
  }
  Rat dmax = symmetrizer_[0];
  for (const Rat& d : symmetrizer_) dmax = std::max(dmax, d);
  for (Rat& d : symmetrizer_) d /= dmax;

  sym_form_.assign(l, std::vector<Rat>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) sym_form_[i][j] = symmetrizer_[i] * cartan_[i][j];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) assert(sym_form_[i][j] == sym_form_[j][i]);

  // Saturate the positive roots from the simple ones: gamma + a_i is a root
  // iff q = p - <gamma, a_i^vee> >= 1, with p found by downward search among
  // the (already generated) lower roots.
  std::set<RootVec> known;
  std::vector<RootVec> frontier;
  for (int i = 0; i < l; ++i) {
    RootVec e(l, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }
  auto known_root = [&](const RootVec& v) { return known.count(v) > 0; };
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& gamma : frontier) {
      for (int i = 0; i < l; ++i) {
        RootVec alpha(l, 0);
        alpha[i] = 1;
        if (gamma == alpha) continue;
        int p = 0;
        RootVec down = sub(gamma, alpha);
        while (known_root(down)) {
          ++p;
          down = sub(down, alpha);
        }
        const long long q = p - coroot_pairing(i, gamma);
        if (q >= 1) {
          RootVec up = add(gamma, alpha);
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  positive_.assign(known.begin(), known.end());
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });

  highest_ = positive_.back();
  for (const RootVec& r : positive_)
    for (int i = 0; i < l; ++i) assert(r[i] <= highest_[i]);
  marks_ = highest_;
  for (int m : marks_) assert(m >= 1);

  Rat sum = 0;
  for (const RootVec& g : positive_) {
    const Rat ip = inner_product(highest_, g);
    sum += 2 * ip * ip;  // positives and negatives contribute equally
  }
  killing_scale_ = sum / inner_product(highest_, highest_);
}

void RootSystem::check_length(size_t n) const {
  if (static_cast<int>(n) != type_.rank)
    throw DimensionMismatchError("vector length " + std::to_string(n) +
                                 " does not match rank " + std::to_string(type_.rank));
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  if (static_cast<int>(v.size()) != type_.rank) return false;
  return std::binary_search(positive_.begin(), positive_.end(), v,
                            [](const RootVec& a, const RootVec& b) {
                              const int ha = height(a), hb = height(b);
                              return ha != hb ? ha < hb : a < b;
                            });
}

bool RootSystem::is_root(const RootVec& v) const {
  bool has_pos = false, has_neg = false;
  for (int c : v) {
    has_pos |= c > 0;
    has_neg |= c < 0;
  }
  if (has_pos && has_neg) return false;
  if (!has_pos && !has_neg) return false;  // zero vector
  return has_pos ? is_positive_root(v) : is_positive_root(negate(v));
}

Rat RootSystem::inner_product(const RootVec& lambda, const RootVec& mu) const {
  check_length(lambda.size());
  check_length(mu.size());
  Rat s = 0;
  for (int i = 0; i < type_.rank; ++i) {
    if (lambda[i] == 0) continue;
    for (int j = 0; j < type_.rank; ++j) {
      if (mu[j] == 0) continue;
      s += Rat(static_cast<long long>(lambda[i]) * mu[j]) * sym_form_[i][j];
    }
  }
  return s;
}

Rat RootSystem::inner_product_rat(const std::vector<Rat>& lambda, const RootVec& mu) const {
  check_length(lambda.size());
  check_length(mu.size());
  Rat s = 0;
  for (int i = 0; i < type_.rank; ++i) {
    if (lambda[i] == 0) continue;
    for (int j = 0; j < type_.rank; ++j) {
      if (mu[j] == 0) continue;
      s += lambda[i] * mu[j] * sym_form_[i][j];
    }
  }
  return s;
}

long long RootSystem::coroot_pairing(int i, const RootVec& v) const {
  long long s = 0;
  for (int j = 0; j < type_.rank; ++j) s += static_cast<long long>(cartan_[i][j]) * v[j];
  return s;
}

std::pair<int, int> RootSystem::root_string(const RootVec& alpha, const RootVec& beta) const {
  if (!is_root(alpha))
    throw NotARootError("root_string: alpha is not a root");
  if (!is_root(beta))
    throw NotARootError("root_string: beta is not a root");
  if (beta == alpha || beta == negate(alpha))
    throw NotARootError("root_string: beta must differ from +-alpha");
  int p = 0;
  RootVec v = sub(beta, alpha);
  while (is_root(v)) {
    ++p;
    v = sub(v, alpha);
  }
  int q = 0;
  v = add(beta, alpha);
  while (is_root(v)) {
    ++q;
    v = add(v, alpha);
  }
  return {p, q};
}

Rat RootSystem::structure_constant_sq(const RootVec& alpha, const RootVec& beta) const {
  if (!is_root(alpha) || !is_root(beta))
    throw NotARootError("structure_constant_sq: arguments must be roots");
  if (!is_root(add(alpha, beta))) return Rat(0);
  const auto [p, q] = root_string(alpha, beta);
  return Rat(q) * (1 + p) * inner_product(alpha, alpha) / killing_scale_ / 2;
}

}  // namespace flagein
