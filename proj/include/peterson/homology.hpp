#pragma once

#include <map>
#include <vector>

#include "peterson/closedform.hpp"
#include "peterson/cohring.hpp"

namespace peterson {

/****************************************************************************

  Equivariant homology of the Peterson variety: a free module on the
  fundamental classes [P_J] of the cells, with the cap product action of the
  cohomology ring.

  Capping by a divisor class is the Chevalley rule; capping by an arbitrary
  class expands it in the Omega basis and caps one divisor at a time, using
  (a cup b) cap c = a cap (b cap c). Integration extracts the coefficient of
  [P_{}] = [pt]: all higher cells push forward to zero under the map to a
  point. Defining the pairing this way keeps it independent of the closed
  multiplicity formulas it is later compared against.

 ****************************************************************************/

struct HomClass {
  int rank = 0;
  std::map<uint32_t, TPoly> coeff;  // mask J -> coefficient of [P_J], zeros omitted

  static HomClass fundamental(int rank, Subset J) {
    HomClass c;
    c.rank = rank;
    c.coeff[J.bits] = TPoly(1);
    return c;
  }

  TPoly at(Subset J) const {
    auto it = coeff.find(J.bits);
    return it == coeff.end() ? TPoly{} : it->second;
  }
  void add(Subset J, const TPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = coeff.try_emplace(J.bits, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }
  bool is_zero() const { return coeff.empty(); }
  friend bool operator==(const HomClass& a, const HomClass& b) = default;
};

inline HomClass operator+(const HomClass& a, const HomClass& b) {
  if (a.rank != b.rank) throw std::invalid_argument("homology classes on different diagrams");
  HomClass r = a;
  for (const auto& [m, p] : b.coeff) r.add(Subset{m}, p);
  return r;
}
inline HomClass operator*(const TPoly& s, const HomClass& a) {
  HomClass r;
  r.rank = a.rank;
  for (const auto& [m, p] : a.coeff) r.add(Subset{m}, s * p);
  return r;
}

// p_alpha cap [P_J] per the Chevalley rule.
inline HomClass cap_divisor(const DynkinDiagram& d, int alpha, Subset J) {
  HomClass out;
  out.rank = d.rank;
  ChevalleyCoeffs c = chevalley(d, alpha, J);
  if (!J.contains(alpha)) return out;
  out.add(J, c.diagonal);
  for (const auto& [beta, v] : c.offdiag) out.add(J.without(beta), TPoly(v));
  return out;
}

inline HomClass cap_divisor(const DynkinDiagram& d, int alpha, const HomClass& c) {
  HomClass out;
  out.rank = c.rank;
  for (const auto& [m, p] : c.coeff) {
    HomClass piece = cap_divisor(d, alpha, Subset{m});
    for (const auto& [k, q] : piece.coeff) out.add(Subset{k}, p * q);
  }
  return out;
}

// x cap c for an arbitrary ring element x, through the Omega expansion.
inline HomClass cap(const PetersonRing& ring, const CohClass& x, const HomClass& c) {
  OmegaExpansion e = ring.expand_in_omega(x);
  HomClass out;
  out.rank = c.rank;
  for (const auto& [mask, g] : e.coeff) {
    HomClass cur = c;
    for (int a : Subset{mask}.elements(ring.rank())) cur = cap_divisor(ring.diagram(), a, cur);
    out = out + g * cur;
  }
  return out;
}

// <x, c>: the coefficient of the point class in x cap c.
inline TPoly integrate(const PetersonRing& ring, const CohClass& x, const HomClass& c) {
  return cap(ring, x, c).at(Subset::empty());
}

struct DualityReport {
  bool ok = true;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

// Checks, purely through iterated capping:
//   <Omega_I, [P_J]> = delta_IJ |W_I| / f_I            for all I, J
//   <p_v, [P_I]>     = R(v) |W_I| / (|I|! f_I)         for every Coxeter v of I
inline DualityReport duality_check(const PetersonRing& ring) {
  const DynkinDiagram& d = ring.diagram();
  DualityReport rep;
  for (uint32_t i = 0; i < ring.num_subsets(); ++i) {
    Subset I{i};
    CohClass omega_i = ring.omega(I);
    Rat expect(weyl_order(d, I), connection_index(d, I));
    for (uint32_t j = 0; j < ring.num_subsets(); ++j) {
      Subset J{j};
      TPoly got = integrate(ring, omega_i, HomClass::fundamental(d.rank, J));
      TPoly want = i == j ? TPoly(expect) : TPoly{};
      rep.require(got == want, "<Omega_" + I.str() + ", [P_" + J.str() + "]> = " + got.str() +
                                   ", expected " + want.str());
    }
  }
  for (uint32_t i = 0; i < ring.num_subsets(); ++i) {
    Subset I{i};
    for (const WeylWord& v : coxeter_elements(d, I)) {
      TPoly got = integrate(ring, ring.p_class(v), HomClass::fundamental(d.rank, I));
      Rat want = multiplicity(d, v);
      rep.require(got == TPoly(want), "<p_v, [P_" + I.str() + "]> = " + got.str() +
                                          ", expected " + rat_str(want));
      rep.require(want > 0 && is_integer(want),
                  "multiplicity for " + I.str() + " is not a positive integer: " + rat_str(want));
    }
  }
  return rep;
}

}  // namespace peterson
