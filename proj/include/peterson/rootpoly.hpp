#pragma once

#include <map>
#include <string>
#include <vector>

#include "peterson/rootdata.hpp"
#include "peterson/tpoly.hpp"

namespace peterson {

// Polynomials in the simple roots alpha_1..alpha_n with rational
// coefficients: the scalars of the big torus. Billey restrictions live here
// until they are pushed down to Q[t] by alpha -> t.
class RootPoly {
 public:
  RootPoly() = default;
  explicit RootPoly(int nvars) : n_(nvars) {}

  static RootPoly one(int nvars) {
    RootPoly p(nvars);
    p.terms_[std::vector<int>(nvars, 0)] = 1;
    return p;
  }

  // Degree-1 polynomial from a weight written in the simple roots.
  static RootPoly linear(const WeightVec& w) {
    RootPoly p(w.size());
    for (int i = 0; i < w.size(); ++i) {
      if (w.coords[i] == 0) continue;
      std::vector<int> e(w.size(), 0);
      e[i] = 1;
      p.terms_[e] = w.coords[i];
    }
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  Rat coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  friend RootPoly operator+(const RootPoly& a, const RootPoly& b) {
    RootPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend RootPoly operator*(const RootPoly& a, const RootPoly& b) {
    RootPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e = ea;
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend RootPoly operator*(const Rat& s, const RootPoly& p) {
    RootPoly r(p.n_);
    if (s == 0) return r;
    r.terms_ = p.terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }
  friend bool operator==(const RootPoly& a, const RootPoly& b) { return a.terms_ == b.terms_; }

  bool is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_) {
      int total = 0;
      for (int x : e) total += x;
      if (total != deg) return false;
    }
    return true;
  }

  // The restriction alpha_i -> t for every i.
  TPoly to_tpoly() const {
    TPoly out;
    for (const auto& [e, c] : terms_) {
      unsigned total = 0;
      for (int x : e) total += static_cast<unsigned>(x);
      out += TPoly::monomial(c, total);
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      out += first ? "" : " + ";
      out += rat_str(c);
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) {
          out += "*a" + std::to_string(i + 1);
          if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
      first = false;
    }
    return out;
  }

 private:
  void add_term(const std::vector<int>& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int n_ = 0;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace peterson
