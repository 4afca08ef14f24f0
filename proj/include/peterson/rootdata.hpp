#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "peterson/rational.hpp"

namespace peterson {

/****************************************************************************

  Root data: Dynkin diagrams, Cartan matrices, root systems, and the
  fundamental (co)weights of arbitrary subdiagrams.

  Conventions, fixed once for the whole library:

   - Nodes are numbered 1..n externally (Bourbaki numbering for the named
     families) and 0..n-1 internally.
   - The Cartan matrix is stored as cartan[i][j] = <alpha_i^vee, alpha_j>,
     so B2 reads [[2,-1],[-2,2]] and row i is the pairing functional of the
     i-th simple coroot.
   - WeightVec holds coordinates in the simple-root basis; CoweightVec holds
     coordinates in the simple-coroot basis. The two are distinct types on
     purpose: fundamental weights of a subdiagram I are not restrictions of
     the ambient ones, and mixing the bases is the classic mistake here.

 ****************************************************************************/

// A subset of the nodes of a diagram, as a bitmask. Node i (0-based) is bit i.
struct Subset {
  uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(uint32_t b) : bits(b) {}

  static constexpr Subset empty() { return Subset{}; }
  static Subset full(int rank) { return Subset{(uint32_t{1} << rank) - 1}; }
  static Subset single(int i) { return Subset{uint32_t{1} << i}; }

  bool contains(int i) const { return (bits >> i) & 1u; }
  int card() const { return std::popcount(bits); }
  bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  bool is_empty() const { return bits == 0; }

  Subset with(int i) const { return Subset{bits | (uint32_t{1} << i)}; }
  Subset without(int i) const { return Subset{bits & ~(uint32_t{1} << i)}; }
  friend Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  friend bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend bool operator<(Subset a, Subset b) { return a.bits < b.bits; }

  std::vector<int> elements(int rank) const {
    std::vector<int> v;
    for (int i = 0; i < rank; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  // "{2,3}" with 1-based node labels; "{}" for the empty set.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
      }
    return s + "}";
  }
};

struct WeightVec {
  std::vector<Rat> coords;  // expansion in simple roots alpha_1..alpha_n

  WeightVec() = default;
  explicit WeightVec(int n) : coords(n, Rat(0)) {}
  explicit WeightVec(std::vector<Rat> c) : coords(std::move(c)) {}

  int size() const { return static_cast<int>(coords.size()); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
  }
  friend WeightVec operator+(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (int i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  friend WeightVec operator-(const WeightVec& a, const WeightVec& b) {
    WeightVec r = a;
    for (int i = 0; i < r.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
  }
  friend WeightVec operator*(const Rat& s, const WeightVec& v) {
    WeightVec r = v;
    for (auto& c : r.coords) c *= s;
    return r;
  }
  friend bool operator==(const WeightVec& a, const WeightVec& b) = default;
};

struct CoweightVec {
  std::vector<Rat> coords;  // expansion in simple coroots

  CoweightVec() = default;
  explicit CoweightVec(int n) : coords(n, Rat(0)) {}
  explicit CoweightVec(std::vector<Rat> c) : coords(std::move(c)) {}

  int size() const { return static_cast<int>(coords.size()); }
  friend CoweightVec operator+(const CoweightVec& a, const CoweightVec& b) {
    CoweightVec r = a;
    for (int i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  friend CoweightVec operator*(const Rat& s, const CoweightVec& v) {
    CoweightVec r = v;
    for (auto& c : r.coords) c *= s;
    return r;
  }
  friend bool operator==(const CoweightVec& a, const CoweightVec& b) = default;
};

struct DynkinDiagram {
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::string label;                     // "B3", "D6", or "custom"

  int entry(int i, int j) const { return cartan[i][j]; }
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.cartan == b.cartan;
  }
};

namespace detail {

// Determinant of the Cartan submatrix over the integers (Bareiss
// fraction-free elimination, so every intermediate value stays integral).
inline Int int_det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Solves M x = rhs by Gaussian elimination over the rationals. M must be
// invertible (Cartan submatrices of finite type always are).
inline std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const int n = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw std::logic_error("solve: singular matrix");
    std::swap(m[k], m[p]);
    std::swap(rhs[k], rhs[p]);
    for (int i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rat> x(n);
  for (int k = 0; k < n; ++k) x[k] = rhs[k] / m[k][k];
  return x;
}

}  // namespace detail

// Connected components of the subdiagram I, in increasing order of their
// smallest node.
inline std::vector<Subset> components(const DynkinDiagram& d, Subset I) {
  std::vector<Subset> comps;
  uint32_t seen = 0;
  for (int i = 0; i < d.rank; ++i) {
    if (!I.contains(i) || (seen >> i) & 1u) continue;
    uint32_t comp = 0, frontier = uint32_t{1} << i;
    while (frontier) {
      comp |= frontier;
      uint32_t next = 0;
      for (int a = 0; a < d.rank; ++a)
        if ((frontier >> a) & 1u)
          for (int b = 0; b < d.rank; ++b)
            if (I.contains(b) && !((comp >> b) & 1u) && d.adjacent(a, b))
              next |= uint32_t{1} << b;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(Subset{comp});
  }
  return comps;
}

// Finite-type check: a generalized Cartan matrix is of finite type exactly
// when every principal minor is positive. Throws naming the offending
// principal minor.
inline void validate_finite_type(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0 || n > 24) throw std::invalid_argument("Cartan matrix rank out of range");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n)
      throw std::invalid_argument("Cartan matrix is not square");
    if (cartan[i][i] != 2)
      throw std::invalid_argument("Cartan matrix diagonal entry != 2 at node " +
                                  std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0 || cartan[i][j] < -3)
        throw std::invalid_argument("Cartan matrix off-diagonal entry out of {0,-1,-2,-3}");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
    }
  }
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    auto nodes = Subset{mask}.elements(n);
    std::vector<std::vector<Int>> sub(nodes.size(), std::vector<Int>(nodes.size()));
    for (size_t a = 0; a < nodes.size(); ++a)
      for (size_t b = 0; b < nodes.size(); ++b) sub[a][b] = cartan[nodes[a]][nodes[b]];
    if (detail::int_det(sub) <= 0)
      throw std::invalid_argument("not of finite type: principal minor on " +
                                  Subset{mask}.str() + " is non-positive");
  }
}

// Builds the Bourbaki Cartan matrix of a named family.
inline DynkinDiagram named_diagram(char family, int n) {
  auto need = [&](bool ok) {
    if (!ok)
      throw std::invalid_argument(std::string("invalid rank for family ") + family + ": " +
                                  std::to_string(n));
  };
  DynkinDiagram d;
  d.rank = n;
  d.label = std::string(1, family) + std::to_string(n);
  d.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  auto bond = [&](int i, int j, int down = -1, int up = -1) {
    d.cartan[i][j] = down;
    d.cartan[j][i] = up;
  };
  switch (family) {
    case 'A':
      need(n >= 1);
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      need(n >= 2);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      need(n >= 2);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      need(n >= 4);
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case 'E':
      need(n >= 6 && n <= 8);
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      need(n == 4);
      bond(0, 1);
      bond(1, 2, -1, -2);
      bond(2, 3);
      break;
    case 'G':
      need(n == 2);
      bond(0, 1, -1, -3);
      break;
    default:
      throw std::invalid_argument(std::string("unknown family: ") + family);
  }
  return d;
}

// Diagram spec grammar: "<FAMILY><rank>" (e.g. "B3"), or an inline JSON
// Cartan matrix {"cartan": [[2,-1],[-2,2]]}. Explicit matrices are validated
// for finite type; named families are trusted.
inline DynkinDiagram build_diagram(const std::string& spec) {
  auto first = spec.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw std::invalid_argument("empty diagram spec");
  if (spec[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("malformed diagram JSON: ") + e.what());
    }
    if (!j.contains("cartan") || !j["cartan"].is_array())
      throw std::invalid_argument("diagram JSON must contain a \"cartan\" matrix");
    DynkinDiagram d;
    for (const auto& row : j["cartan"]) {
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw std::invalid_argument("Cartan entries must be integers");
        r.push_back(x.get<int>());
      }
      d.cartan.push_back(std::move(r));
    }
    d.rank = static_cast<int>(d.cartan.size());
    d.label = "custom";
    validate_finite_type(d.cartan);
    return d;
  }
  char family = static_cast<char>(std::toupper(spec[first]));
  std::string rest = spec.substr(first + 1);
  size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(rest, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed diagram spec: '" + spec + "'");
  }
  if (pos != rest.size() || n <= 0)
    throw std::invalid_argument("malformed diagram spec: '" + spec + "'");
  return named_diagram(family, n);
}

// The induced subdiagram on I, together with the list mapping its nodes
// (0-based, in increasing order) back to the ambient ones.
inline std::pair<DynkinDiagram, std::vector<int>> restrict_diagram(const DynkinDiagram& d,
                                                                   Subset I) {
  auto nodes = I.elements(d.rank);
  DynkinDiagram r;
  r.rank = static_cast<int>(nodes.size());
  r.label = d.label + "|" + I.str();
  r.cartan.assign(r.rank, std::vector<int>(r.rank, 0));
  for (int a = 0; a < r.rank; ++a)
    for (int b = 0; b < r.rank; ++b) r.cartan[a][b] = d.cartan[nodes[a]][nodes[b]];
  return {std::move(r), std::move(nodes)};
}

// Connection index f_I = det C_I; f of the empty set is 1, and the value is
// multiplicative over connected components since C_I is block diagonal.
inline Int connection_index(const DynkinDiagram& d, Subset I) {
  auto nodes = I.elements(d.rank);
  std::vector<std::vector<Int>> sub(nodes.size(), std::vector<Int>(nodes.size()));
  for (size_t a = 0; a < nodes.size(); ++a)
    for (size_t b = 0; b < nodes.size(); ++b) sub[a][b] = d.cartan[nodes[a]][nodes[b]];
  return detail::int_det(sub);
}

// <beta^vee, lambda> for a simple coroot beta.
inline Rat simple_pairing(const DynkinDiagram& d, int beta, const WeightVec& w) {
  Rat s = 0;
  for (int j = 0; j < d.rank; ++j)
    if (w.coords[j] != 0) s += Rat(d.cartan[beta][j]) * w.coords[j];
  return s;
}

// The bilinear pairing of an arbitrary coweight with an arbitrary weight.
inline Rat pairing(const DynkinDiagram& d, const CoweightVec& c, const WeightVec& w) {
  if (c.size() != d.rank || w.size() != d.rank)
    throw std::invalid_argument("pairing: dimension mismatch");
  Rat s = 0;
  for (int i = 0; i < d.rank; ++i)
    if (c.coords[i] != 0) s += c.coords[i] * simple_pairing(d, i, w);
  return s;
}

// Fundamental weight of the subdiagram I at a node alpha in I: the unique
// vector supported on I with <beta^vee, w> = delta_{alpha beta} for beta in I.
// These are not stable under enlarging I.
inline WeightVec fundamental_weight(const DynkinDiagram& d, Subset I, int alpha) {
  if (!I.contains(alpha))
    throw std::domain_error("fundamental_weight: node " + std::to_string(alpha + 1) +
                            " is not in " + I.str());
  auto nodes = I.elements(d.rank);
  const int m = static_cast<int>(nodes.size());
  std::vector<std::vector<Rat>> sub(m, std::vector<Rat>(m));
  std::vector<Rat> rhs(m, Rat(0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) sub[a][b] = d.cartan[nodes[a]][nodes[b]];
    if (nodes[a] == alpha) rhs[a] = 1;
  }
  auto x = detail::solve(std::move(sub), std::move(rhs));
  WeightVec w(d.rank);
  for (int a = 0; a < m; ++a) w.coords[nodes[a]] = x[a];
  return w;
}

// Fundamental coweight of I at alpha: <w, beta> = delta_{alpha beta} for all
// beta in I. Solves against the transposed Cartan submatrix.
inline CoweightVec fundamental_coweight(const DynkinDiagram& d, Subset I, int alpha) {
  if (!I.contains(alpha))
    throw std::domain_error("fundamental_coweight: node " + std::to_string(alpha + 1) +
                            " is not in " + I.str());
  auto nodes = I.elements(d.rank);
  const int m = static_cast<int>(nodes.size());
  std::vector<std::vector<Rat>> sub(m, std::vector<Rat>(m));
  std::vector<Rat> rhs(m, Rat(0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) sub[a][b] = d.cartan[nodes[b]][nodes[a]];
    if (nodes[a] == alpha) rhs[a] = 1;
  }
  auto x = detail::solve(std::move(sub), std::move(rhs));
  CoweightVec w(d.rank);
  for (int a = 0; a < m; ++a) w.coords[nodes[a]] = x[a];
  return w;
}

// All positive roots of the subsystem on I, as root-coordinate vectors.
// Saturation: every root is Weyl-conjugate to a simple one, so closing the
// simple roots of I under the reflections s_beta (keeping the vectors with
// non-negative coordinates) produces exactly phi_I^+.
inline std::vector<WeightVec> positive_roots(const DynkinDiagram& d, Subset I) {
  auto nodes = I.elements(d.rank);
  std::vector<WeightVec> roots;
  std::set<std::vector<Rat>> seen;
  for (int a : nodes) {
    WeightVec r(d.rank);
    r.coords[a] = 1;
    seen.insert(r.coords);
    roots.push_back(std::move(r));
  }
  for (size_t k = 0; k < roots.size(); ++k) {
    WeightVec cur = roots[k];
    for (int b : nodes) {
      Rat pair = simple_pairing(d, b, cur);
      if (pair == 0) continue;
      WeightVec img = cur;
      img.coords[b] -= pair;  // s_b(cur) differs only in the b coordinate
      bool positive = true;
      for (const auto& c : img.coords) positive &= (c >= 0);
      if (positive && seen.insert(img.coords).second) roots.push_back(std::move(img));
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const WeightVec& a, const WeightVec& b) { return a.coords < b.coords; });
  return roots;
}

// Positive coroots of I, in simple-coroot coordinates: the positive roots of
// the dual system, i.e. of the transposed Cartan matrix.
inline std::vector<CoweightVec> positive_coroots(const DynkinDiagram& d, Subset I) {
  DynkinDiagram dual = d;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) dual.cartan[i][j] = d.cartan[j][i];
  auto roots = positive_roots(dual, I);
  std::vector<CoweightVec> out;
  out.reserve(roots.size());
  for (auto& r : roots) out.push_back(CoweightVec(std::move(r.coords)));
  return out;
}

// rho_I, computed both as the half-sum of phi_I^+ and as the sum of the
// fundamental weights of I; the two must agree.
inline WeightVec rho(const DynkinDiagram& d, Subset I) {
  WeightVec half(d.rank);
  for (const auto& r : positive_roots(d, I)) half = half + r;
  half = Rat(1, 2) * half;
  WeightVec sum(d.rank);
  for (int a : I.elements(d.rank)) sum = sum + fundamental_weight(d, I, a);
  if (!(half == sum)) throw std::logic_error("rho: half-sum and weight-sum formulas disagree");
  return half;
}

inline CoweightVec rho_check(const DynkinDiagram& d, Subset I) {
  CoweightVec half(d.rank);
  for (const auto& r : positive_coroots(d, I)) half = half + r;
  half = Rat(1, 2) * half;
  CoweightVec sum(d.rank);
  for (int a : I.elements(d.rank)) sum = sum + fundamental_coweight(d, I, a);
  if (!(half == sum))
    throw std::logic_error("rho_check: half-sum and coweight-sum formulas disagree");
  return half;
}

// ht(lambda): the sum of the simple-root coordinates, which equals
// <rho^vee, lambda>; both are computed and compared.
inline Rat height(const DynkinDiagram& d, const WeightVec& w) {
  if (w.size() != d.rank) throw std::invalid_argument("height: dimension mismatch");
  Rat s = 0;
  for (const auto& c : w.coords) s += c;
  Rat via_rho = pairing(d, rho_check(d, Subset::full(d.rank)), w);
  if (s != via_rho) throw std::logic_error("height: coordinate sum != <rho^vee, .>");
  return s;
}

}  // namespace peterson
