#pragma once

#include <nlohmann/json.hpp>

#include "peterson/cohring.hpp"
#include "peterson/homology.hpp"

namespace peterson {

// JSON schemas for classes:
//   {"basis":"fixed_point"|"omega"|"fundamental", "rank":n,
//    "entries":[{"subset":[1,2], "poly":["0","4"]}, ...]}
// Coefficients are exact rationals as "p" or "p/q" strings, listed from t^0
// upward; zero entries are omitted.

inline nlohmann::json poly_to_json(const TPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(rat_str(p.coeff(k)));
  return a;
}

inline TPoly poly_from_json(const nlohmann::json& a) {
  if (!a.is_array()) throw std::invalid_argument("poly must be an array of rational strings");
  TPoly p;
  for (size_t k = 0; k < a.size(); ++k) {
    Rat c = a[k].is_string() ? parse_rat(a[k].get<std::string>()) : Rat(a[k].get<long long>());
    p += TPoly::monomial(c, static_cast<unsigned>(k));
  }
  return p;
}

inline nlohmann::json subset_to_json(Subset s) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < 32; ++i)
    if (s.contains(i)) a.push_back(i + 1);
  return a;
}

inline Subset subset_from_json(const nlohmann::json& a, int rank) {
  Subset s;
  for (const auto& v : a) {
    int i = v.get<int>();
    if (i < 1 || i > rank) throw std::invalid_argument("subset node out of range in JSON");
    s = s.with(i - 1);
  }
  return s;
}

namespace detail {

template <typename Iter>
nlohmann::json entries_json(Iter begin, Iter end) {
  nlohmann::json a = nlohmann::json::array();
  for (auto it = begin; it != end; ++it) {
    const auto& [mask, poly] = *it;
    if (poly.is_zero()) continue;
    a.push_back({{"subset", subset_to_json(Subset{static_cast<uint32_t>(mask)})},
                 {"poly", poly_to_json(poly)}});
  }
  return a;
}

}  // namespace detail

inline nlohmann::json to_json(const CohClass& c) {
  std::vector<std::pair<uint32_t, TPoly>> entries;
  for (uint32_t m = 0; m < c.fp.size(); ++m)
    if (!c.fp[m].is_zero()) entries.emplace_back(m, c.fp[m]);
  return {{"basis", "fixed_point"},
          {"rank", c.rank},
          {"entries", detail::entries_json(entries.begin(), entries.end())}};
}

inline nlohmann::json to_json(const OmegaExpansion& e) {
  return {{"basis", "omega"},
          {"rank", e.rank},
          {"entries", detail::entries_json(e.coeff.begin(), e.coeff.end())}};
}

inline nlohmann::json to_json(const HomClass& c) {
  return {{"basis", "fundamental"},
          {"rank", c.rank},
          {"entries", detail::entries_json(c.coeff.begin(), c.coeff.end())}};
}

inline CohClass coh_from_json(const nlohmann::json& j) {
  if (j.at("basis") != "fixed_point")
    throw std::invalid_argument("expected a fixed_point basis class");
  int rank = j.at("rank").get<int>();
  CohClass c{rank, std::vector<TPoly>(size_t{1} << rank)};
  for (const auto& e : j.at("entries"))
    c.at(subset_from_json(e.at("subset"), rank)) = poly_from_json(e.at("poly"));
  return c;
}

inline OmegaExpansion omega_from_json(const nlohmann::json& j) {
  if (j.at("basis") != "omega") throw std::invalid_argument("expected an omega basis class");
  OmegaExpansion e;
  e.rank = j.at("rank").get<int>();
  for (const auto& entry : j.at("entries")) {
    TPoly p = poly_from_json(entry.at("poly"));
    if (!p.is_zero()) e.coeff[subset_from_json(entry.at("subset"), e.rank).bits] = std::move(p);
  }
  return e;
}

inline HomClass hom_from_json(const nlohmann::json& j) {
  if (j.at("basis") != "fundamental")
    throw std::invalid_argument("expected a fundamental basis class");
  HomClass c;
  c.rank = j.at("rank").get<int>();
  for (const auto& entry : j.at("entries"))
    c.add(subset_from_json(entry.at("subset"), c.rank), poly_from_json(entry.at("poly")));
  return c;
}

}  // namespace peterson
