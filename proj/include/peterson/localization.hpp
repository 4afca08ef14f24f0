#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "peterson/rootpoly.hpp"
#include "peterson/weylcox.hpp"

namespace peterson {

/****************************************************************************

  Localization at torus fixed points.

  billey_restrict computes the restriction of an equivariant Schubert class
  to a fixed point by Billey's subword formula: fix a reduced word
  v = s_{b_1} ... s_{b_m}; then

    sigma_w |_v  =  sum over index sets j_1 < ... < j_k, k = l(w), with
                    s_{b_{j_1}} ... s_{b_{j_k}} = w,  of
                    prod_i  r(j_i),       r(j) = s_{b_1}...s_{b_{j-1}}(alpha_{b_j}).

  The roots r(j) depend only on the position j, so the sum is a dynamic
  program over prefixes of v, with states the partial subword products.
  Each chosen letter must lengthen the partial product (otherwise the final
  product cannot reach length l(w)), and partial products that are not below
  w in Bruhat order are dead; this keeps the state sets tiny even for long v.

  The contract for fixed-point values on the Peterson side is
  p_w |_{w_J} = restrict_to_S(billey_restrict(w, w_J)); p_restrict computes
  the same sum directly over Q[t] (every root contributes its height times t),
  which is the composition of the two maps applied before expanding.

 ****************************************************************************/

inline TPoly restrict_to_S(const RootPoly& p) { return p.to_tpoly(); }

namespace detail {

struct BilleyPrefix {
  std::vector<WeylElt> reflections;  // s_{b_j}
  std::vector<WeightVec> roots;      // r(j), positive roots
};

inline BilleyPrefix billey_prefix_data(const DynkinDiagram& d, const WeylWord& v) {
  BilleyPrefix out;
  WeylElt prefix = WeylElt::identity(d.rank);
  for (int l : v) {
    WeightVec alpha(d.rank);
    alpha.coords[l] = 1;
    out.roots.push_back(prefix.apply(alpha));
    out.reflections.push_back(simple_reflection(d, l));
    prefix = prefix * out.reflections.back();
  }
  return out;
}

}  // namespace detail

inline RootPoly billey_restrict(const DynkinDiagram& d, const WeylWord& w, const WeylWord& v) {
  if (!is_reduced(d, w) || !is_reduced(d, v))
    throw std::domain_error("billey_restrict: inputs must be reduced words");
  const int k = static_cast<int>(w.size());
  if (k == 0) return RootPoly::one(d.rank);

  const WeylElt target = element_of(d, w);
  const auto below = bruhat_interval_below(d, w);
  const auto pre = detail::billey_prefix_data(d, v);

  std::map<WeylElt, std::pair<int, RootPoly>> dp;  // element -> (length, sum)
  dp.emplace(WeylElt::identity(d.rank), std::make_pair(0, RootPoly::one(d.rank)));
  for (size_t j = 0; j < v.size(); ++j) {
    int letter = v[j];
    RootPoly factor = RootPoly::linear(pre.roots[j]);
    std::vector<std::pair<WeylElt, std::pair<int, RootPoly>>> grow;
    for (const auto& [u, st] : dp) {
      if (st.first >= k || !u.sends_simple_positive(letter)) continue;
      WeylElt next = u * pre.reflections[j];
      if (!below.count(next)) continue;
      grow.emplace_back(std::move(next), std::make_pair(st.first + 1, st.second * factor));
    }
    for (auto& [u, st] : grow) {
      auto [it, fresh] = dp.try_emplace(std::move(u), std::move(st));
      if (!fresh) it->second.second = it->second.second + st.second;
    }
  }
  auto it = dp.find(target);
  return it == dp.end() ? RootPoly(d.rank) : it->second.second;
}

// p_w restricted to the fixed point w_J, directly over Q[t]. The value is a
// rational multiple of t^{l(w)}; it vanishes unless supp(w) is inside J.
inline TPoly p_restrict_at(const DynkinDiagram& d, const WeylWord& w, const WeylWord& vj) {
  if (!is_reduced(d, w)) throw std::domain_error("p_restrict: word is not reduced");
  const int k = static_cast<int>(w.size());
  if (k == 0) return TPoly(1);
  if (!support(w).subset_of(support(vj))) return TPoly{};

  const WeylElt target = element_of(d, w);
  const auto below = bruhat_interval_below(d, w);
  const auto pre = detail::billey_prefix_data(d, vj);
  std::vector<Int> heights(vj.size());
  for (size_t j = 0; j < vj.size(); ++j) {
    Rat h = 0;
    for (const auto& c : pre.roots[j].coords) h += c;
    heights[j] = numerator(h);  // roots have integer coordinates
  }

  std::map<WeylElt, std::pair<int, Int>> dp;
  dp.emplace(WeylElt::identity(d.rank), std::make_pair(0, Int(1)));
  for (size_t j = 0; j < vj.size(); ++j) {
    int letter = vj[j];
    std::vector<std::pair<WeylElt, std::pair<int, Int>>> grow;
    for (const auto& [u, st] : dp) {
      if (st.first >= k || !u.sends_simple_positive(letter)) continue;
      WeylElt next = u * pre.reflections[j];
      if (!below.count(next)) continue;
      grow.emplace_back(std::move(next), std::make_pair(st.first + 1, st.second * heights[j]));
    }
    for (auto& [u, st] : grow) {
      auto [it, fresh] = dp.try_emplace(std::move(u), std::move(st));
      if (!fresh) it->second.second += st.second;
    }
  }
  auto it = dp.find(target);
  if (it == dp.end()) return TPoly{};
  return TPoly::monomial(Rat(it->second.second), static_cast<unsigned>(k));
}

inline TPoly p_restrict(const DynkinDiagram& d, const WeylWord& w, Subset J) {
  return p_restrict_at(d, w, longest_element(d, J));
}

}  // namespace peterson
