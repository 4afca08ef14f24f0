#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "peterson/cohring.hpp"
#include "peterson/homology.hpp"

namespace peterson {

// Text rendering shared by the CLI and the golden tests. Rationals print as
// p/q, polynomials as "c0 + c1t + c2t^2", and expansions as coefficient
// followed by basis symbol, e.g. "4t [P_{1,2}] + 4 [P_{1}] + 4 [P_{2}]".

inline std::string subset_str(Subset s) { return s.is_empty() ? "∅" : s.str(); }

inline std::string omega_symbol(Subset s) { return "Ω_" + subset_str(s); }
inline std::string cycle_symbol(Subset s) { return "[P_" + subset_str(s) + "]"; }

inline std::string coeff_symbol_term(const TPoly& c, const std::string& symbol) {
  if (c == TPoly(1)) return symbol;
  std::string cs = c.str();
  if (!c.is_monomial()) cs = "(" + cs + ")";
  return cs + " " + symbol;
}

// Renders a sum of coefficient*symbol terms; zero coefficients are skipped.
inline std::string expansion_str(const std::vector<std::pair<Subset, TPoly>>& terms,
                                 std::string (*symbol)(Subset)) {
  std::string out;
  for (const auto& [s, c] : terms) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeff_symbol_term(c, symbol(s));
  }
  return out.empty() ? "0" : out;
}

inline std::string hom_class_str(const HomClass& c) {
  std::vector<std::pair<Subset, TPoly>> terms;
  for (const auto& [m, p] : c.coeff) terms.emplace_back(Subset{m}, p);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ca = a.first.card(), cb = b.first.card();
    return ca != cb ? ca > cb : a.first.bits < b.first.bits;
  });
  return expansion_str(terms, cycle_symbol);
}

inline std::string omega_expansion_str(const OmegaExpansion& e) {
  std::vector<std::pair<Subset, TPoly>> terms;
  for (const auto& [m, p] : e.coeff) terms.emplace_back(Subset{m}, p);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ca = a.first.card(), cb = b.first.card();
    return ca != cb ? ca < cb : a.first.bits < b.first.bits;
  });
  return expansion_str(terms, omega_symbol);
}

inline std::string chevalley_str(const ChevalleyCoeffs& c) {
  if (!c.J.contains(c.alpha)) return "0";
  std::vector<std::pair<Subset, TPoly>> terms;
  for (const auto& [beta, v] : c.offdiag) terms.emplace_back(c.J.without(beta), TPoly(v));
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first.bits < b.first.bits; });
  terms.insert(terms.begin(), {c.J, c.diagonal});
  return expansion_str(terms, cycle_symbol);
}

inline std::string monk_str(const MonkCoeffs& m) {
  if (m.bare) return omega_symbol(m.bare_target);
  std::vector<std::pair<Subset, TPoly>> terms;
  terms.emplace_back(m.I, m.diagonal);
  for (const auto& [gamma, v] : m.up) terms.emplace_back(m.I.with(gamma), TPoly(v));
  return expansion_str(terms, omega_symbol);
}

inline std::string word_str(const WeylWord& w) {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(w[k] + 1);
  }
  return out.empty() ? "e" : out;
}

// Subset syntax on the CLI: comma-separated 1-based node indices, e.g. "2,3".
inline Subset parse_subset(const std::string& text, int rank) {
  Subset s;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty() || trimmed == "-" || trimmed == "{}") return s;
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed subset: '" + text + "'");
    }
    if (pos != tok.size() || v < 1 || v > rank)
      throw std::invalid_argument("subset node out of range: '" + tok + "'");
    s = s.with(v - 1);
  }
  return s;
}

// Word syntax: space or comma separated 1-based indices, e.g. "2 1 3".
inline WeylWord parse_word(const std::string& text, int rank) {
  WeylWord w;
  std::string norm = text;
  for (char& c : norm)
    if (c == ',') c = ' ';
  std::stringstream ss(norm);
  std::string tok;
  while (ss >> tok) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed word: '" + text + "'");
    }
    if (pos != tok.size() || v < 1 || v > rank)
      throw std::invalid_argument("word letter out of range: '" + tok + "'");
    w.push_back(v - 1);
  }
  return w;
}

}  // namespace peterson
