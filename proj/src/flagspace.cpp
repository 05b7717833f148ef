#include "flagein/flagspace.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace flagein {

PaintedDiagram::PaintedDiagram(std::shared_ptr<const RootSystem> rs, int node)
    : root_system(std::move(rs)), painted_index(node) {
  if (!root_system) throw Error("painted diagram requires a root system");
  if (node < 1 || node > root_system->rank())
    throw Error("painted node " + std::to_string(node) + " out of range 1.." +
                std::to_string(root_system->rank()));
}

namespace {

int bond(const RootSystem& rs, int i, int j) {
  return rs.cartan()[i][j] * rs.cartan()[j][i];
}

LieType classify_component(const RootSystem& rs, const std::vector<int>& nodes0) {
  const int n = static_cast<int>(nodes0.size());
  if (n == 1) return LieType('A', 1);

  std::map<int, std::vector<int>> adj;  // within the component
  bool triple = false;
  std::pair<int, int> dbl{-1, -1};
  for (int i : nodes0)
    for (int j : nodes0) {
      if (i >= j || bond(rs, i, j) == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (bond(rs, i, j) == 3) triple = true;
      if (bond(rs, i, j) == 2) dbl = {i, j};
    }
  if (triple) return LieType('G', 2);

  int branch = -1;
  for (int i : nodes0)
    if (adj[i].size() == 3) branch = i;

  if (branch >= 0) {
    // Leg lengths from the branch node decide D versus E.
    std::vector<int> legs;
    for (int s : adj[branch]) {
      int len = 1, prev = branch, cur = s;
      while (true) {
        int next = -1;
        for (int t : adj[cur])
          if (t != prev) next = t;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return LieType('D', n);
    return LieType('E', n);
  }

  if (dbl.first < 0) return LieType('A', n);

  // Chain with one double edge: B when the short end of the edge is a leaf,
  // C when the long end is (B2 for the ambiguous two-node case).
  int u = dbl.first, v = dbl.second;  // make u the long side
  if (rs.symmetrizer()[u] < rs.symmetrizer()[v]) std::swap(u, v);
  const bool u_leaf = adj[u].size() == 1;
  const bool v_leaf = adj[v].size() == 1;
  if (u_leaf && v_leaf) return LieType('B', 2);
  if (v_leaf) return LieType('B', n);
  if (u_leaf) return LieType('C', n);
  return LieType('F', 4);
}

std::string group_name(const LieType& t) {
  switch (t.family) {
    case 'A': return "SU(" + std::to_string(t.rank + 1) + ")";
    case 'B': return "SO(" + std::to_string(2 * t.rank + 1) + ")";
    case 'C': return "Sp(" + std::to_string(t.rank) + ")";
    case 'D': return "SO(" + std::to_string(2 * t.rank) + ")";
    case 'E': return "E" + std::to_string(t.rank);
    case 'F': return "F4";
    case 'G': return "G2";
  }
  return "?";
}

// K label in the style of the classification tables: classical paintings
// absorb the U(1) into the U(p) factor of the left chain, exceptional ones
// list the semisimple factors (largest first) followed by U(1).
std::string k_label(const RootSystem& rs, int painted) {
  const LieType& t = rs.type();
  const int l = t.rank, p = painted;
  if (t.family == 'B' || t.family == 'C' || t.family == 'D') {
    const int m = l - p;
    std::string s = "U(" + std::to_string(p) + ")";
    if (t.family == 'B' && m >= 1) s += "xSO(" + std::to_string(2 * m + 1) + ")";
    if (t.family == 'C') s += "xSp(" + std::to_string(m) + ")";
    if (t.family == 'D') s += "xSO(" + std::to_string(2 * m) + ")";
    return s;
  }
  if (t.family == 'G') return "U(2)";
  auto comps = unpainted_components(rs, painted);
  std::sort(comps.begin(), comps.end(),
            [](const SubdiagramComponent& a, const SubdiagramComponent& b) {
              if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
              return group_name(a.type) < group_name(b.type);
            });
  std::string s;
  for (const auto& c : comps) s += group_name(c.type) + "x";
  return s + "U(1)";
}

std::string hermitian_symmetric_name(const LieType& t, int node) {
  const int l = t.rank;
  if (t.family == 'C' && node == l) return "Sp(" + std::to_string(l) + ")/U(" + std::to_string(l) + ")";
  if (t.family == 'B' && node == 1)
    return "SO(" + std::to_string(2 * l + 1) + ")/U(1)xSO(" + std::to_string(2 * l - 1) + ")";
  if (t.family == 'D' && node == 1)
    return "SO(" + std::to_string(2 * l) + ")/U(1)xSO(" + std::to_string(2 * l - 2) + ")";
  if (t.family == 'D' && (node == l - 1 || node == l))
    return "SO(" + std::to_string(2 * l) + ")/U(" + std::to_string(l) + ")";
  return "";
}

}  // namespace

std::vector<SubdiagramComponent> unpainted_components(const RootSystem& rs, int painted) {
  const int l = rs.rank();
  std::vector<bool> seen(l, false);
  seen[painted - 1] = true;
  std::vector<SubdiagramComponent> out;
  for (int s = 0; s < l; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < l; ++j)
        if (!seen[j] && bond(rs, comp[k], j) != 0) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    SubdiagramComponent c;
    c.type = classify_component(rs, comp);
    for (int i : comp) c.nodes.push_back(i + 1);
    out.push_back(std::move(c));
  }
  return out;
}

TwoSummandSpace validate(const PaintedDiagram& pd) {
  const RootSystem& rs = *pd.root_system;
  const int i0 = pd.painted_index - 1;
  const int mark = rs.marks()[i0];
  if (mark != 2) {
    const std::string hs = mark == 1 ? hermitian_symmetric_name(rs.type(), pd.painted_index) : "";
    std::string msg = "painted node " + std::to_string(pd.painted_index) + " of " +
                      rs.type().name() + " has height " + std::to_string(mark) +
                      ", not 2; the isotropy representation does not split into two summands";
    if (!hs.empty()) msg += " (the painting gives the Hermitian symmetric space " + hs + ")";
    throw HeightNotTwoError(mark, hs, msg);
  }

  TwoSummandSpace ts{pd, {}, 0, 0, ""};
  for (const RootVec& r : rs.positive_roots()) {
    const int n = r[i0];
    assert(n >= 0 && n <= 2);
    ts.grading[n].push_back(r);
  }
  ts.d1 = 2 * static_cast<long long>(ts.grading[1].size());
  ts.d2 = 2 * static_cast<long long>(ts.grading[2].size());
  assert(ts.d1 > 0 && ts.d2 > 0);
  ts.k_description = k_label(rs, pd.painted_index);
  return ts;
}

const std::vector<RootVec>& grading_class(const TwoSummandSpace& ts, int n) {
  if (n < 0 || n > 2)
    throw BadLevelError("grading level " + std::to_string(n) + " outside {0,1,2}");
  return ts.grading[n];
}

std::vector<int> automorphism_orbit(const RootSystem& rs, int node) {
  const int l = rs.rank();
  const auto& a = rs.cartan();

  // Node signature: symmetrizer, mark and sorted incident bond types.
  auto signature = [&](int i) {
    std::vector<int> bonds;
    for (int j = 0; j < l; ++j)
      if (i != j && a[i][j] != 0) bonds.push_back(bond(rs, i, j));
    std::sort(bonds.begin(), bonds.end());
    return std::tuple(rs.symmetrizer()[i], rs.marks()[i], bonds);
  };
  std::vector<decltype(signature(0))> sig;
  for (int i = 0; i < l; ++i) sig.push_back(signature(i));

  std::vector<int> perm(l, -1);
  std::vector<bool> used(l, false);
  std::vector<int> orbit_hits(l, 0);
  std::function<void(int)> dfs = [&](int i) {
    if (i == l) {
      orbit_hits[perm[node - 1]] = 1;
      return;
    }
    for (int img = 0; img < l; ++img) {
      if (used[img] || sig[img] != sig[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a[perm[j]][img] == a[j][i] && a[img][perm[j]] == a[i][j];
      if (!ok) continue;
      perm[i] = img;
      used[img] = true;
      dfs(i + 1);
      used[img] = false;
      perm[i] = -1;
    }
  };
  dfs(0);

  std::vector<int> orbit;
  for (int i = 0; i < l; ++i)
    if (orbit_hits[i]) orbit.push_back(i + 1);
  return orbit;
}

std::vector<TwoSummandSpace> enumerate_spaces(const LieType& t, bool dedup) {
  auto rs = std::make_shared<const RootSystem>(t);
  std::vector<TwoSummandSpace> out;
  for (int node = 1; node <= t.rank; ++node) {
    if (rs->marks()[node - 1] != 2) continue;
    if (dedup) {
      const auto orbit = automorphism_orbit(*rs, node);
      if (orbit.front() != node) continue;  // keep the smallest representative
    }
    out.push_back(validate(PaintedDiagram(rs, node)));
  }
  return out;
}

}  // namespace flagein
