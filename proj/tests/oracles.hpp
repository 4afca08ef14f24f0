#pragma once

// Brute-force reference computations for the test suite. Everything here is
// deliberately naive and independent of the library's production algorithms:
// plain enumeration wherever it is affordable. Expected values frozen into
// the tests were produced by these oracles.

#include <map>
#include <set>
#include <vector>

#include "peterson/localization.hpp"
#include "peterson/weylcox.hpp"

namespace oracle {

using namespace peterson;

// Number of linear extensions of a DAG given by edges u -> v (u before v),
// by bitmask DP.
inline long long linear_extensions(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<uint32_t> preds(n, 0);
  for (auto [u, v] : edges) preds[v] |= uint32_t{1} << u;
  std::vector<long long> ways(uint32_t{1} << n, 0);
  ways[0] = 1;
  for (uint32_t m = 0; m < (uint32_t{1} << n); ++m) {
    if (!ways[m]) continue;
    for (int v = 0; v < n; ++v)
      if (!((m >> v) & 1u) && (preds[v] & ~m) == 0) ways[m | (uint32_t{1} << v)] += ways[m];
  }
  return ways[(uint32_t{1} << n) - 1];
}

// Number of acyclic orientations of an undirected graph, by trying all 2^e
// orientations and testing for cycles.
inline long long acyclic_orientations(int n, const std::vector<std::pair<int, int>>& edges) {
  const int e = static_cast<int>(edges.size());
  long long count = 0;
  for (uint32_t dir = 0; dir < (uint32_t{1} << e); ++dir) {
    std::vector<std::vector<int>> adj(n);
    for (int k = 0; k < e; ++k) {
      auto [a, b] = edges[k];
      if ((dir >> k) & 1u)
        adj[a].push_back(b);
      else
        adj[b].push_back(a);
    }
    // DFS cycle test
    std::vector<int> state(n, 0);
    bool cyc = false;
    auto dfs = [&](auto&& self, int v) -> void {
      state[v] = 1;
      for (int w : adj[v]) {
        if (state[w] == 1) cyc = true;
        if (state[w] == 0 && !cyc) self(self, w);
      }
      state[v] = 2;
    };
    for (int v = 0; v < n && !cyc; ++v)
      if (state[v] == 0) dfs(dfs, v);
    count += !cyc;
  }
  return count;
}

// Edges of the diagram graph restricted to I.
inline std::vector<std::pair<int, int>> diagram_edges(const DynkinDiagram& d, Subset I) {
  std::vector<std::pair<int, int>> e;
  auto nodes = I.elements(d.rank);
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = a + 1; b < nodes.size(); ++b)
      if (d.adjacent(nodes[a], nodes[b])) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return e;
}

// Orientation of the diagram edges induced by a Coxeter word: a -> b when a
// appears before b in the word.
inline std::vector<std::pair<int, int>> induced_orientation(const DynkinDiagram& d,
                                                            const WeylWord& v) {
  std::map<int, int> pos;
  for (size_t k = 0; k < v.size(); ++k) pos[v[k]] = static_cast<int>(k);
  std::map<int, int> local;  // node -> index within the support
  auto nodes = support(v).elements(d.rank);
  for (size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> e;
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = a + 1; b < nodes.size(); ++b)
      if (d.adjacent(nodes[a], nodes[b])) {
        if (pos[nodes[a]] < pos[nodes[b]])
          e.emplace_back(local[nodes[a]], local[nodes[b]]);
        else
          e.emplace_back(local[nodes[b]], local[nodes[a]]);
      }
  return e;
}

// |W_I| by enumerating the orbit of rho_I.
inline long long orbit_weyl_order(const DynkinDiagram& d, Subset I) {
  WeightVec start = rho(d, I);
  std::set<std::vector<Rat>> orbit{start.coords};
  std::vector<WeightVec> frontier{start};
  auto nodes = I.elements(d.rank);
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& v : frontier)
      for (int b : nodes) {
        WeightVec img = v;
        img.coords[b] -= simple_pairing(d, b, v);
        if (orbit.insert(img.coords).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(orbit.size());
}

// All reduced words for the element of `target`, by trying every word of the
// same length over the support alphabet. Exponential; keep lengths small.
inline std::set<WeylWord> all_reduced_words(const DynkinDiagram& d, const WeylWord& target) {
  WeylElt goal = element_of(d, target);
  const int k = static_cast<int>(target.size());
  std::set<WeylWord> found;
  std::vector<int> letters;
  for (int i = 0; i < d.rank; ++i) letters.push_back(i);
  WeylWord cur(k, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      if (is_reduced(d, cur) && element_of(d, cur) == goal) found.insert(cur);
      return;
    }
    for (int l : letters) {
      cur[pos] = l;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return found;
}

// Billey's subword sum with no dynamic programming at all: every index
// subset of the right size is tried.
inline RootPoly billey_brute_force(const DynkinDiagram& d, const WeylWord& w, const WeylWord& v) {
  const int m = static_cast<int>(v.size());
  const int k = static_cast<int>(w.size());
  WeylElt goal = element_of(d, w);
  // position -> partial-product root r(j)
  std::vector<WeightVec> roots;
  WeylElt prefix = WeylElt::identity(d.rank);
  for (int l : v) {
    WeightVec alpha(d.rank);
    alpha.coords[l] = 1;
    roots.push_back(prefix.apply(alpha));
    prefix = prefix * simple_reflection(d, l);
  }
  RootPoly total(d.rank);
  for (uint32_t pick = 0; pick < (uint32_t{1} << m); ++pick) {
    if (std::popcount(pick) != k) continue;
    WeylWord sub;
    for (int j = 0; j < m; ++j)
      if ((pick >> j) & 1u) sub.push_back(v[j]);
    if (!(element_of(d, sub) == goal)) continue;
    RootPoly prod = RootPoly::one(d.rank);
    for (int j = 0; j < m; ++j)
      if ((pick >> j) & 1u) prod = prod * RootPoly::linear(roots[j]);
    total = total + prod;
  }
  return total;
}

}  // namespace oracle
