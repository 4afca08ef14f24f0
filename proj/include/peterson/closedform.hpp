#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "peterson/weylcox.hpp"
#include "peterson/tpoly.hpp"

namespace peterson {

/****************************************************************************

  Closed-form structure constants.

  Everything here is elementary root-system arithmetic on a subdiagram:
  writing the fundamental weight of J at alpha as a sum of simple roots in J
  gives all the brackets, and the remaining factors are ratios of Weyl group
  orders and connection indices. These are the constants of

    - the Chevalley rule: a divisor class capped with a fundamental class,
    - the Monk rule: a divisor class times an Omega basis element,
    - its translation into a fixed choice of Coxeter classes,
    - the multiplicity of a Coxeter class against its own cell,

  together with closed-form constant tables for the classical families,
  re-derived from the general formulas.

 ****************************************************************************/

// p_alpha cap [P_J]: the t-coefficient on [P_J] itself plus one term for each
// node removed from J. Zero record when alpha is not in J.
struct ChevalleyCoeffs {
  int alpha = -1;
  Subset J;
  TPoly diagonal;              // <2 rho_J^vee, w_alpha^J> t
  std::map<int, Rat> offdiag;  // removed node beta -> <w_beta^{Jv}, w_alpha^J> |W_J|/|W_K|
};

// Omega_alpha * Omega_I. For alpha not in I the product is just
// Omega_{I + alpha}; otherwise a t-term on Omega_I plus one term per node
// gamma adjacent to the subdiagram.
struct MonkCoeffs {
  int alpha = -1;
  Subset I;
  bool bare = false;      // alpha not in I: result is Omega_{I + alpha}
  Subset bare_target;
  TPoly diagonal;         // 2 <rho_I^vee, w_alpha^I> t
  std::map<int, Rat> up;  // added node gamma -> (f_J/f_I) <w_gamma^{Jv}, w_alpha^J>
};

namespace detail {

// Coordinates of the fundamental weight of J at alpha, in the simple roots.
// Entry beta is <w_beta^{Jv}, w_alpha^J>.
inline std::vector<Rat> weight_coords(const DynkinDiagram& d, Subset J, int alpha) {
  return fundamental_weight(d, J, alpha).coords;
}

}  // namespace detail

inline ChevalleyCoeffs chevalley(const DynkinDiagram& d, int alpha, Subset J) {
  if (alpha < 0 || alpha >= d.rank) throw std::domain_error("chevalley: node out of range");
  ChevalleyCoeffs out;
  out.alpha = alpha;
  out.J = J;
  if (!J.contains(alpha)) return out;  // zero record
  auto coords = detail::weight_coords(d, J, alpha);
  Rat diag = 0;
  Int wj = weyl_order(d, J);
  for (int beta : J.elements(d.rank)) {
    diag += 2 * coords[beta];
    Int ratio = exact_div(wj, weyl_order(d, J.without(beta)));
    out.offdiag[beta] = coords[beta] * Rat(ratio);
  }
  out.diagonal = TPoly::monomial(diag, 1);
  return out;
}

inline MonkCoeffs monk(const DynkinDiagram& d, int alpha, Subset I) {
  if (alpha < 0 || alpha >= d.rank) throw std::domain_error("monk: node out of range");
  MonkCoeffs out;
  out.alpha = alpha;
  out.I = I;
  if (!I.contains(alpha)) {
    out.bare = true;
    out.bare_target = I.with(alpha);
    return out;
  }
  auto coords = detail::weight_coords(d, I, alpha);
  Rat diag = 0;
  for (int beta : I.elements(d.rank)) diag += 2 * coords[beta];
  out.diagonal = TPoly::monomial(diag, 1);
  Rat f_i(connection_index(d, I));
  for (int gamma = 0; gamma < d.rank; ++gamma) {
    if (I.contains(gamma)) continue;
    Subset J = I.with(gamma);
    Rat f_j(connection_index(d, J));
    out.up[gamma] = (f_j / f_i) * detail::weight_coords(d, J, alpha)[gamma];
  }
  return out;
}

// The multiplicity <p_v, [P_I]> of a Coxeter word v for I:
// R(v) |W_I| / (|I|! f_I). Positive by construction; integrality is a
// property to be observed, not assumed, so the result stays rational.
inline Rat multiplicity(const DynkinDiagram& d, const WeylWord& v) {
  if (!is_coxeter_word(d, v)) throw std::domain_error("multiplicity: not a Coxeter word");
  Subset I = support(v);
  Int r = reduced_word_count(d, v);
  return Rat(r * weyl_order(d, I), factorial(static_cast<unsigned>(I.card())) * connection_index(d, I));
}

// <Omega_Delta, [P]> = |W| / f_Delta.
inline Rat klyachko_integral(const DynkinDiagram& d) {
  Subset full = Subset::full(d.rank);
  return Rat(weyl_order(d, full), connection_index(d, full));
}

// The Monk rule rewritten for a fixed choice of Coxeter classes p_{v_I}:
// the Omega and Coxeter bases differ by the diagonal Giambelli rescaling,
// so the coefficients pick up ratios of reduced-word counts.
struct PBasisMonk {
  std::map<uint32_t, TPoly> coeff;  // subset mask K -> coefficient of p_{v_K}
};

inline PBasisMonk monk_p_basis(const DynkinDiagram& d, int alpha, Subset I,
                               const std::map<uint32_t, WeylWord>& coxeter_choice) {
  auto word_for = [&](Subset K) -> const WeylWord& {
    auto it = coxeter_choice.find(K.bits);
    if (it == coxeter_choice.end())
      throw std::domain_error("monk_p_basis: no Coxeter word chosen for " + K.str());
    if (!is_coxeter_word(d, it->second) || !(support(it->second) == K))
      throw std::domain_error("monk_p_basis: chosen word is not Coxeter for " + K.str());
    return it->second;
  };
  PBasisMonk out;
  if (!I.contains(alpha)) {
    Subset J = I.with(alpha);
    Int ri = I.is_empty() ? Int(1) : reduced_word_count(d, word_for(I));
    Int rj = reduced_word_count(d, word_for(J));
    out.coeff[J.bits] = TPoly(Rat(Int(I.card() + 1) * ri, rj));
    return out;
  }
  MonkCoeffs m = monk(d, alpha, I);
  Int ri = reduced_word_count(d, word_for(I));
  out.coeff[I.bits] = m.diagonal;
  for (const auto& [gamma, c] : m.up) {
    if (c == 0) continue;
    Subset J = I.with(gamma);
    Int rj = reduced_word_count(d, word_for(J));
    // (|J| f_J R(v_I)) / (f_I R(v_J)) * <w_gamma^{Jv}, w_alpha^J>
    out.coeff[J.bits] = TPoly(c * Rat(Int(J.card()) * ri, rj));
  }
  return out;
}

/*--------------------------------------------------------------------------
  Structure-constant tables for the classical families.

  Each entry carries the value derived from the general formula and, where
  the tabulated closed form for that row is unambiguous, the closed-form
  value with an assertion flag. Rows whose intended reading cannot be
  pinned down are emitted with both values and flagged instead of asserted.
--------------------------------------------------------------------------*/

struct TableEntry {
  int table = 1;              // 1: diagonal t-terms, 2: Chevalley, 3: Monk
  char family = 'A';
  int n = 0;                  // rank of the diagram in the row
  int i = 0;                  // node of the divisor class (1-based, row labels)
  int j = 0;                  // removed node (table 2) or 0
  std::string pair_desc;      // human-readable (J, K) description
  Rat general;                // value from the general formula
  std::optional<Rat> closed;  // tabulated closed form, when readable
  bool asserted = false;      // closed form is treated as a regression target
  bool agree = true;          // general == closed (meaningful when closed set)
};

namespace detail {

inline Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int t = 0; t < k; ++t) r = exact_div(r * (n - t), t + 1);
  return r;
}

inline Rat table1_closed(char f, int n, int i) {
  switch (f) {
    case 'A':
      return Rat(i) * (n + 1 - i);
    case 'B':
      return i == n ? Rat(n * (n + 1), 2) : Rat(i) * (2 * n + 1 - i);
    case 'C':
      return Rat(i) * (2 * n - i);
    case 'D':
      return (i == n - 1 || i == n) ? Rat(n * (n - 1), 2) : Rat(i) * (2 * n - 1 - i);
  }
  throw std::logic_error("table1_closed");
}

inline Rat table2_closed(char f, int n, int i, int j) {
  switch (f) {
    case 'A':
      return j <= i ? Rat(binom(n, j - 1) * (n - i + 1)) : Rat(binom(n, j) * i);
    case 'B':
      return i == n ? Rat(Int(1) << (n - 1)) : Rat((Int(1) << i) * binom(n, i) * std::min(i, j));
    case 'C':
      return j == n ? Rat((Int(1) << (i - 1)) * binom(n, i) * i)
                    : Rat((Int(1) << i) * binom(n, i) * std::min(i, j));
    case 'D':
      if (i == j && i >= n - 1) return Rat((Int(1) << (n - 3)) * n);
      if (std::min(i, j) == n - 1 && std::max(i, j) == n) return Rat((Int(1) << (n - 3)) * (n - 2));
      if (i <= n - 2 && j >= n - 1) return Rat((Int(1) << (n - 2)) * i);
      if (i >= n - 1 && j <= n - 2) return Rat((Int(1) << (j - 1)) * j * binom(n, j));
      return Rat((Int(1) << j) * binom(n, j) * std::min(i, j));
  }
  throw std::logic_error("table2_closed");
}

}  // namespace detail

// Tables of Chevalley/Monk constants for a classical family, evaluated from
// the general formulas on the full diagram of each rank, with the tabulated
// closed-form expressions alongside.
//
// Asserted rows: the diagonal t-terms (table 1, all families), the table 2
// rows confirmed by the worked rank-2 examples (all of type A; type B at
// n = 2), and the table 3 subdiagram pairs, whose reading reproduces the
// worked examples. The remaining table 2 rows are emitted with both values
// for inspection but not asserted: the row conventions for them
// cannot be pinned down from the available text.
inline std::vector<TableEntry> emit_tables(char family, int max_rank) {
  if (family != 'A' && family != 'B' && family != 'C' && family != 'D')
    throw std::invalid_argument("emit_tables: family must be one of A, B, C, D");
  std::vector<TableEntry> out;
  int min_rank = family == 'A' ? 1 : family == 'D' ? 4 : 2;
  for (int n = min_rank; n <= max_rank; ++n) {
    DynkinDiagram d = named_diagram(family, n);
    Subset full = Subset::full(n);

    for (int i = 1; i <= n; ++i) {
      ChevalleyCoeffs ch = chevalley(d, i - 1, full);
      TableEntry e;
      e.table = 1;
      e.family = family;
      e.n = n;
      e.i = i;
      e.pair_desc = d.label;
      e.general = ch.diagonal.coeff(1);
      e.closed = detail::table1_closed(family, n, i);
      e.asserted = true;
      e.agree = e.general == *e.closed;
      out.push_back(e);

      for (int j = 1; j <= n; ++j) {
        TableEntry c;
        c.table = 2;
        c.family = family;
        c.n = n;
        c.i = i;
        c.j = j;
        c.pair_desc = d.label + " minus node " + std::to_string(j);
        c.general = ch.offdiag.at(j - 1);
        c.closed = detail::table2_closed(family, n, i, j);
        c.asserted = family == 'A' || (family == 'B' && n == 2 && i == 1);
        c.agree = c.general == *c.closed;
        out.push_back(c);
      }
    }

    // Table 3: the Monk coefficient multiplying Omega_J for J = I + gamma,
    // in the two canonical pairs per family: gamma appended at the branch
    // end (I = diagram minus its last node) and gamma prepended at node 1
    // (I = diagram minus its first node).
    auto monk_up = [&](Subset I, int gamma, int i) -> Rat {
      MonkCoeffs m = monk(d, i - 1, I);
      return m.up.at(gamma - 1);
    };
    auto closed_append = [&](int i) -> Rat {  // I = {1..n-1}, gamma = n
      switch (family) {
        case 'A':
          return Rat(i, n);
        case 'B':
          return Rat(2 * i, n);
        case 'C':
          return Rat(i, n);
        case 'D':
          return i == n - 1 ? Rat(n - 2, n) : Rat(2 * i, n);
      }
      throw std::logic_error("closed_append");
    };
    auto closed_prepend = [&](int i) -> Rat {  // I = {2..n}, gamma = 1
      switch (family) {
        case 'A':
          return Rat(n - i + 1, n);  // mirror image of the append pair
        case 'B':
          return i == n ? Rat(1, 2) : Rat(1);
        case 'C':
          return Rat(1);
        case 'D':
          return (i == n - 1 || i == n) ? Rat(1, 2) : Rat(1);
      }
      throw std::logic_error("closed_prepend");
    };
    if (n >= 2) {
      Subset head = full.without(n - 1);  // {1..n-1}
      Subset tail = full.without(0);      // {2..n}
      for (int i = 1; i <= n - 1; ++i) {
        TableEntry e;
        e.table = 3;
        e.family = family;
        e.n = n;
        e.i = i;
        e.pair_desc = "(" + head.str() + " -> " + d.label + ")";
        e.general = monk_up(head, n, i);
        e.closed = closed_append(i);
        e.asserted = true;
        e.agree = e.general == *e.closed;
        out.push_back(e);
      }
      for (int i = 2; i <= n; ++i) {
        TableEntry e;
        e.table = 3;
        e.family = family;
        e.n = n;
        e.i = i;
        e.pair_desc = "(" + tail.str() + " -> " + d.label + ")";
        e.general = monk_up(tail, 1, i);
        e.closed = closed_prepend(i);
        e.asserted = true;
        e.agree = e.general == *e.closed;
        out.push_back(e);
      }
    }
  }
  return out;
}

}  // namespace peterson
