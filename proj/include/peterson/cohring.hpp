#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "peterson/localization.hpp"

namespace peterson {

/****************************************************************************

  The equivariant cohomology ring of the Peterson variety, in the GKM-style
  fixed-point model.

  The fixed points are indexed by subsets J of the diagram (the point being
  the longest element w_J), and a class is the tuple of its restrictions,
  one polynomial in t per subset. Restriction to fixed points is injective,
  so addition and multiplication are pointwise.

  The divisor classes generate. Omega_I denotes the product of the divisor
  classes over I; the values Omega_I|_{w_J} vanish unless I is contained in
  J and are nonzero at J = I, so expanding a class in the Omega basis is
  back-substitution along the subset order. The coefficients of genuine ring
  elements are polynomials in t; a rational-function coefficient can only
  mean the input tuple is not in the ring, which is reported as an error.

 ****************************************************************************/

struct CohClass {
  int rank = 0;
  std::vector<TPoly> fp;  // indexed by subset mask; size 2^rank

  const TPoly& at(Subset J) const { return fp[J.bits]; }
  TPoly& at(Subset J) { return fp[J.bits]; }
  bool is_zero() const {
    return std::all_of(fp.begin(), fp.end(), [](const TPoly& p) { return p.is_zero(); });
  }
  friend bool operator==(const CohClass& a, const CohClass& b) = default;
};

inline void check_same_model(const CohClass& a, const CohClass& b) {
  if (a.rank != b.rank || a.fp.size() != b.fp.size())
    throw std::invalid_argument("cohomology classes live on different diagrams");
}

inline CohClass operator+(const CohClass& a, const CohClass& b) {
  check_same_model(a, b);
  CohClass r = a;
  for (size_t m = 0; m < r.fp.size(); ++m) r.fp[m] += b.fp[m];
  return r;
}
inline CohClass operator*(const CohClass& a, const CohClass& b) {
  check_same_model(a, b);
  CohClass r = a;
  for (size_t m = 0; m < r.fp.size(); ++m) r.fp[m] *= b.fp[m];
  return r;
}
inline CohClass operator*(const TPoly& s, const CohClass& a) {
  CohClass r = a;
  for (auto& p : r.fp) p = s * p;
  return r;
}
inline CohClass operator-(const CohClass& a, const CohClass& b) {
  return a + (TPoly(-1) * b);
}

// Coefficients of a class in the basis {Omega_I}.
struct OmegaExpansion {
  int rank = 0;
  std::map<uint32_t, TPoly> coeff;  // mask -> coefficient, zero terms omitted

  TPoly at(Subset I) const {
    auto it = coeff.find(I.bits);
    return it == coeff.end() ? TPoly{} : it->second;
  }
  friend bool operator==(const OmegaExpansion& a, const OmegaExpansion& b) = default;
};

struct GiambelliReport {
  bool ok = true;
  Int reduced_words = 1;      // R(v)
  Rat scale;                  // R(v)/|I|!
  Subset witness;             // first failing fixed point when !ok
  TPoly lhs, rhs;             // values at the witness
};

class PetersonRing {
 public:
  explicit PetersonRing(DynkinDiagram d) : d_(std::move(d)) {
    if (d_.rank > 14)
      throw std::invalid_argument("fixed-point model limited to rank <= 14 (2^rank points)");
    const uint32_t nsub = uint32_t{1} << d_.rank;
    longest_.resize(nsub);
    divisor_ht_.assign(nsub, std::vector<Rat>(d_.rank, Rat(0)));
    std::vector<WeightVec> fw;
    fw.reserve(d_.rank);
    for (int a = 0; a < d_.rank; ++a)
      fw.push_back(fundamental_weight(d_, Subset::full(d_.rank), a));
    for (uint32_t m = 0; m < nsub; ++m) {
      Subset J{m};
      longest_[m] = longest_element(d_, J);
      WeylElt wj = element_of(d_, longest_[m]);
      for (int a : J.elements(d_.rank)) {
        WeightVec moved = fw[a] - wj.apply(fw[a]);
        Rat h = 0;
        for (const auto& c : moved.coords) h += c;
        divisor_ht_[m][a] = h;  // p_a |_{w_J} = h * t
      }
    }
  }

  const DynkinDiagram& diagram() const { return d_; }
  int rank() const { return d_.rank; }
  uint32_t num_subsets() const { return uint32_t{1} << d_.rank; }
  const WeylWord& longest_word(Subset J) const { return longest_[J.bits]; }
  const Rat& divisor_height(Subset J, int a) const { return divisor_ht_[J.bits][a]; }

  // Omega_I |_{w_J} as a scalar multiple of t^{|I|} (zero unless I <= J).
  Rat omega_value(Subset I, Subset J) const {
    Rat v = 1;
    for (int a : I.elements(d_.rank)) {
      v *= divisor_ht_[J.bits][a];
      if (v == 0) break;
    }
    return v;
  }

  CohClass zero() const { return CohClass{d_.rank, std::vector<TPoly>(num_subsets())}; }
  CohClass scalar(const TPoly& c) const {
    CohClass r = zero();
    for (auto& p : r.fp) p = c;
    return r;
  }
  CohClass unit() const { return scalar(TPoly(1)); }

  CohClass omega(Subset I) const {
    CohClass r = zero();
    for (uint32_t m = 0; m < num_subsets(); ++m)
      r.fp[m] = TPoly::monomial(omega_value(I, Subset{m}), I.card());
    return r;
  }
  CohClass divisor(int a) const { return omega(Subset::single(a)); }

  // q_a = sum_b <beta^vee, alpha> p_b, the Cartan-matrix combination of the
  // divisors.
  CohClass q_class(int a) const {
    CohClass r = zero();
    for (int b = 0; b < d_.rank; ++b)
      if (d_.cartan[b][a] != 0) r = r + (TPoly(d_.cartan[b][a]) * divisor(b));
    return r;
  }

  // The pullback of the Schubert class of w, evaluated at every fixed point
  // via the Billey sum.
  CohClass p_class(const WeylWord& w) const {
    CohClass r = zero();
    for (uint32_t m = 0; m < num_subsets(); ++m)
      r.fp[m] = p_restrict_at(d_, w, longest_[m]);
    return r;
  }

  OmegaExpansion expand_in_omega(const CohClass& x) const {
    if (x.rank != d_.rank) throw std::invalid_argument("expand_in_omega: wrong diagram");
    std::vector<uint32_t> order(num_subsets());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
      int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    OmegaExpansion out;
    out.rank = d_.rank;
    for (uint32_t m : order) {
      Subset J{m};
      TPoly residue = x.fp[m];
      for (const auto& [i, g] : out.coeff)
        if (Subset{i}.subset_of(J))
          residue = residue - g * TPoly::monomial(omega_value(Subset{i}, J), Subset{i}.card());
      if (residue.is_zero()) continue;
      auto g = residue.divide_by_monomial(omega_value(J, J), J.card());
      if (!g)
        throw std::domain_error("class outside the model ring: coefficient of Omega_" + J.str() +
                                " is not a polynomial in t");
      out.coeff[m] = std::move(*g);
    }
    return out;
  }

  CohClass from_omega(const OmegaExpansion& e) const {
    CohClass r = zero();
    for (const auto& [m, g] : e.coeff) r = r + g * omega(Subset{m});
    return r;
  }

  // The Giambelli identity for a Coxeter word v of I: the Schubert pullback
  // p_v equals (R(v)/|I|!) Omega_I at every fixed point.
  GiambelliReport giambelli_check(const WeylWord& v) const {
    if (!is_coxeter_word(d_, v))
      throw std::domain_error("giambelli_check: not a Coxeter word (each letter once, reduced)");
    Subset I = support(v);
    GiambelliReport rep;
    rep.reduced_words = reduced_word_count(d_, v);
    rep.scale = Rat(rep.reduced_words, factorial(static_cast<unsigned>(I.card())));
    for (uint32_t m = 0; m < num_subsets(); ++m) {
      Subset J{m};
      TPoly lhs = I.subset_of(J) ? p_restrict_at(d_, v, longest_[m]) : TPoly{};
      TPoly rhs = rep.scale * TPoly::monomial(omega_value(I, J), I.card());
      if (!(lhs == rhs)) {
        rep.ok = false;
        rep.witness = J;
        rep.lhs = lhs;
        rep.rhs = rhs;
        return rep;
      }
    }
    return rep;
  }

  // p_a (q_a - 2t) = 0: the defining relations of the ring presentation.
  bool relation_check(int a) const {
    CohClass lhs = divisor(a) * (q_class(a) - scalar(TPoly::monomial(2, 1)));
    return lhs.is_zero();
  }

  // At t = 0 the Omega-expansion of p_w agrees with the average of the
  // divisor products over all reduced words of w (the ordinary-cohomology
  // Giambelli identity); the equivariant classes differ in general.
  bool klyachko_ordinary_check(const WeylWord& w) const {
    if (!is_reduced(d_, w)) throw std::domain_error("klyachko_ordinary_check: word not reduced");
    CohClass sum = zero();
    for (const auto& u : braid_closure(d_, w)) {
      CohClass prod = unit();
      for (int l : u) prod = prod * divisor(l);
      sum = sum + prod;
    }
    Rat inv_factorial(1, factorial(static_cast<unsigned>(w.size())));
    OmegaExpansion lhs = expand_in_omega(p_class(w));
    OmegaExpansion rhs = expand_in_omega(sum);
    for (uint32_t m = 0; m < num_subsets(); ++m) {
      Subset K{m};
      if (lhs.at(K).at_zero() != inv_factorial * rhs.at(K).at_zero()) return false;
    }
    return true;
  }

 private:
  DynkinDiagram d_;
  std::vector<WeylWord> longest_;
  std::vector<std::vector<Rat>> divisor_ht_;
};

}  // namespace peterson
