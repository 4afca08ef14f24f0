#pragma once

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "peterson/rootdata.hpp"

namespace peterson {

/****************************************************************************

  Weyl groups as words in the simple reflections.

  A WeylWord is a sequence of node indices (0-based internally); the word
  (l_1, ..., l_k) denotes s_{l_1} s_{l_2} ... s_{l_k}, applied right to left.

  Group elements are represented by their integral action on the root
  lattice: column j of the matrix is the image of alpha_j in simple-root
  coordinates. This representation is faithful, so equality of elements is
  equality of matrices; no word normal forms are needed anywhere.

 ****************************************************************************/

using WeylWord = std::vector<int>;

struct WeylElt {
  int n = 0;
  std::vector<int> mat;  // row-major n*n; column j = image of alpha_j

  static WeylElt identity(int n) {
    WeylElt e;
    e.n = n;
    e.mat.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e.mat[static_cast<size_t>(i) * n + i] = 1;
    return e;
  }

  int at(int i, int j) const { return mat[static_cast<size_t>(i) * n + j]; }

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    WeylElt r;
    r.n = a.n;
    r.mat.assign(a.mat.size(), 0);
    for (int i = 0; i < a.n; ++i)
      for (int k = 0; k < a.n; ++k) {
        int aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n; ++j) r.mat[static_cast<size_t>(i) * a.n + j] += aik * b.at(k, j);
      }
    return r;
  }

  WeightVec apply(const WeightVec& w) const {
    WeightVec r(n);
    for (int i = 0; i < n; ++i) {
      Rat s = 0;
      for (int j = 0; j < n; ++j)
        if (w.coords[j] != 0 && at(i, j) != 0) s += Rat(at(i, j)) * w.coords[j];
      r.coords[i] = s;
    }
    return r;
  }

  // Sign of w(alpha_j): every column is a root, so all entries share a sign.
  bool sends_simple_positive(int j) const {
    for (int i = 0; i < n; ++i) {
      int v = at(i, j);
      if (v > 0) return true;
      if (v < 0) return false;
    }
    throw std::logic_error("WeylElt: zero column");
  }

  bool is_identity() const { return *this == identity(n); }
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.mat == b.mat; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.mat < b.mat; }
};

inline WeylElt simple_reflection(const DynkinDiagram& d, int s) {
  WeylElt r = WeylElt::identity(d.rank);
  for (int j = 0; j < d.rank; ++j) r.mat[static_cast<size_t>(s) * d.rank + j] -= d.cartan[s][j];
  return r;
}

inline void check_letters(const DynkinDiagram& d, const WeylWord& w) {
  for (int l : w)
    if (l < 0 || l >= d.rank)
      throw std::domain_error("word letter out of range: " + std::to_string(l + 1));
}

inline WeylElt element_of(const DynkinDiagram& d, const WeylWord& w) {
  check_letters(d, w);
  WeylElt e = WeylElt::identity(d.rank);
  for (int l : w) e = e * simple_reflection(d, l);
  return e;
}

inline WeightVec act(const DynkinDiagram& d, const WeylWord& w, const WeightVec& v) {
  check_letters(d, w);
  if (v.size() != d.rank) throw std::invalid_argument("act: dimension mismatch");
  WeightVec r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Rat pair = simple_pairing(d, *it, r);
    r.coords[*it] -= pair;
  }
  return r;
}

// Length of the element built from a word: appending a letter s to u changes
// length by +1 exactly when u(alpha_s) > 0.
inline int element_length(const DynkinDiagram& d, const WeylWord& w) {
  check_letters(d, w);
  WeylElt u = WeylElt::identity(d.rank);
  int len = 0;
  for (int l : w) {
    len += u.sends_simple_positive(l) ? 1 : -1;
    u = u * simple_reflection(d, l);
  }
  return len;
}

inline bool is_reduced(const DynkinDiagram& d, const WeylWord& w) {
  return element_length(d, w) == static_cast<int>(w.size());
}

inline Subset support(const WeylWord& w) {
  Subset s;
  for (int l : w) s = s.with(l);
  return s;
}

namespace detail {

struct SimpleType {
  char family;
  int rank;
};

// Reads the type of a connected finite-type subdiagram off its shape. Only
// the data needed for |W| matters, so B and C are not distinguished.
inline SimpleType classify_component(const DynkinDiagram& d, Subset comp) {
  auto nodes = comp.elements(d.rank);
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {'A', 1};

  int triple = 0, doubled = 0;
  std::vector<int> deg(n, 0);
  std::pair<int, int> double_edge{-1, -1};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!d.adjacent(nodes[a], nodes[b])) continue;
      ++deg[a], ++deg[b];
      int bond = d.cartan[nodes[a]][nodes[b]] * d.cartan[nodes[b]][nodes[a]];
      if (bond == 3) ++triple;
      if (bond == 2) ++doubled, double_edge = {a, b};
    }
  auto fail = [&] {
    throw std::invalid_argument("unrecognized finite-type component on " + comp.str());
  };
  int branches = 0, branch = -1;
  for (int a = 0; a < n; ++a) {
    if (deg[a] > 3) fail();
    if (deg[a] == 3) ++branches, branch = a;
  }
  if (triple) {
    if (n != 2 || doubled || branches) fail();
    return {'G', 2};
  }
  if (doubled) {
    if (doubled > 1 || branches) fail();
    if (n == 2) return {'B', 2};
    bool interior = deg[double_edge.first] == 2 && deg[double_edge.second] == 2;
    if (interior && n == 4) return {'F', 4};
    if (interior) fail();
    return {'B', n};
  }
  if (branches == 0) return {'A', n};
  if (branches > 1) fail();
  // Leg lengths from the branch node determine D versus E.
  std::vector<int> legs;
  for (int a = 0; a < n; ++a) {
    if (deg[a] != 1) continue;
    int len = 0, cur = a, prev = -1;
    while (cur != branch) {
      ++len;
      for (int b = 0; b < n; ++b)
        if (b != prev && b != cur && d.adjacent(nodes[cur], nodes[b])) {
          prev = cur;
          cur = b;
          break;
        }
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() != 3) fail();
  if (legs[0] == 1 && legs[1] == 1) return {'D', n};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return {'E', n};
  fail();
  return {'A', 0};  // unreachable
}

inline Int component_order(SimpleType t) {
  switch (t.family) {
    case 'A':
      return factorial(t.rank + 1);
    case 'B':
      return (Int(1) << t.rank) * factorial(t.rank);
    case 'D':
      return (Int(1) << (t.rank - 1)) * factorial(t.rank);
    case 'E':
      return t.rank == 6 ? Int(51840) : t.rank == 7 ? Int(2903040) : Int(696729600);
    case 'F':
      return 1152;
    case 'G':
      return 12;
  }
  throw std::logic_error("component_order: bad family");
}

}  // namespace detail

// |W_I| via the closed formulas, multiplicatively over components.
inline Int weyl_order(const DynkinDiagram& d, Subset I) {
  Int order = 1;
  for (Subset comp : components(d, I)) order *= detail::component_order(detail::classify_component(d, comp));
  return order;
}

// A reduced word for the longest element w_I: drive rho_I to the antidominant
// chamber of I, one simple reflection at a time. The number of steps is
// |phi_I^+|.
inline WeylWord longest_element(const DynkinDiagram& d, Subset I) {
  WeightVec lambda = rho(d, I);
  auto nodes = I.elements(d.rank);
  std::vector<int> applied;
  for (;;) {
    int pick = -1;
    for (int b : nodes)
      if (simple_pairing(d, b, lambda) > 0) {
        pick = b;
        break;
      }
    if (pick < 0) break;
    lambda.coords[pick] -= simple_pairing(d, pick, lambda);
    applied.push_back(pick);
  }
  return {applied.rbegin(), applied.rend()};
}

// All distinct Coxeter elements of W_I: words using each node of I exactly
// once, deduplicated by group element.
inline std::vector<WeylWord> coxeter_elements(const DynkinDiagram& d, Subset I) {
  auto letters = I.elements(d.rank);
  std::vector<WeylWord> reps;
  std::set<WeylElt> seen;
  std::sort(letters.begin(), letters.end());
  do {
    if (seen.insert(element_of(d, letters)).second) reps.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return reps;
}

inline bool is_coxeter_word(const DynkinDiagram& d, const WeylWord& w) {
  Subset s = support(w);
  return static_cast<int>(w.size()) == s.card() && is_reduced(d, w);
}

// Order m(s_a, s_b) of the product of two simple reflections.
inline int braid_order(const DynkinDiagram& d, int a, int b) {
  switch (d.cartan[a][b] * d.cartan[b][a]) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
  }
  throw std::logic_error("braid_order: bad Cartan entries");
}

// The full set of reduced words of the element of w, by closure under braid
// and commutation moves.
inline std::vector<WeylWord> braid_closure(const DynkinDiagram& d, const WeylWord& w) {
  if (!is_reduced(d, w)) throw std::domain_error("braid_closure: word is not reduced");
  std::set<WeylWord> seen{w};
  std::queue<WeylWord> todo;
  todo.push(w);
  const int k = static_cast<int>(w.size());
  while (!todo.empty()) {
    WeylWord cur = todo.front();
    todo.pop();
    for (int p = 0; p < k - 1; ++p) {
      int a = cur[p], b = cur[p + 1];
      if (a == b) continue;
      int m = braid_order(d, a, b);
      if (p + m > k) continue;
      bool alternates = true;
      for (int q = 0; q < m; ++q) alternates &= cur[p + q] == (q % 2 == 0 ? a : b);
      if (!alternates) continue;
      WeylWord next = cur;
      for (int q = 0; q < m; ++q) next[p + q] = q % 2 == 0 ? b : a;
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// R(v): the number of distinct reduced expressions.
inline Int reduced_word_count(const DynkinDiagram& d, const WeylWord& v) {
  return Int(braid_closure(d, v).size());
}

// All elements u <= w in Bruhat order, from the subword property applied to
// one reduced word of w.
inline std::set<WeylElt> bruhat_interval_below(const DynkinDiagram& d, const WeylWord& w) {
  if (!is_reduced(d, w)) throw std::domain_error("bruhat_interval_below: word is not reduced");
  std::set<WeylElt> below{WeylElt::identity(d.rank)};
  for (int l : w) {
    WeylElt s = simple_reflection(d, l);
    std::vector<WeylElt> grow;
    for (const WeylElt& u : below)
      if (u.sends_simple_positive(l)) grow.push_back(u * s);
    below.insert(grow.begin(), grow.end());
  }
  return below;
}

// u <= w via the lifting property: for a right descent s of w,
// u <= w iff (us <= ws when us < u, else u <= ws).
inline bool bruhat_leq(const DynkinDiagram& d, WeylElt u, WeylElt w) {
  for (;;) {
    int s = -1;
    for (int j = 0; j < d.rank; ++j)
      if (!w.sends_simple_positive(j)) {
        s = j;
        break;
      }
    if (s < 0) return u.is_identity();  // w = e
    WeylElt refl = simple_reflection(d, s);
    w = w * refl;
    if (!u.sends_simple_positive(s)) u = u * refl;
  }
}

}  // namespace peterson
