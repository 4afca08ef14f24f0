#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peterson/rational.hpp"

namespace peterson {

/*
  Univariate polynomials in the equivariant parameter t, with exact rational
  coefficients. This is the scalar ring of the one-dimensional torus: every
  simple root restricts to t, so all fixed-point values, structure constants
  and pairings live here. The coefficient vector is kept normalized (no
  trailing zeros); the zero polynomial is the empty vector.
*/
class TPoly {
 public:
  TPoly() = default;
  TPoly(Rat constant) {  // NOLINT: implicit by design, scalars embed
    if (constant != 0) c_.push_back(std::move(constant));
  }
  TPoly(int constant) : TPoly(Rat(constant)) {}

  static TPoly monomial(Rat coeff, unsigned deg) {
    TPoly p;
    if (coeff != 0) {
      p.c_.assign(deg + 1, Rat(0));
      p.c_[deg] = std::move(coeff);
    }
    return p;
  }
  static TPoly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat at_zero() const { return coeff(0); }

  bool is_monomial() const {
    unsigned nz = 0;
    for (const auto& c : c_) nz += (c != 0);
    return nz <= 1;
  }

  friend TPoly operator+(const TPoly& a, const TPoly& b) {
    TPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t k = 0; k < a.c_.size(); ++k) r.c_[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
    r.trim();
    return r;
  }
  friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
  TPoly operator-() const {
    TPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    TPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend TPoly operator*(const Rat& s, const TPoly& p) {
    if (s == 0) return {};
    TPoly r = p;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

  // Exact division by the monomial c*t^k; nullopt when the quotient would not
  // be a polynomial.
  std::optional<TPoly> divide_by_monomial(const Rat& c, unsigned k) const {
    if (c == 0) return std::nullopt;
    if (is_zero()) return TPoly{};
    if (c_.size() < k) return std::nullopt;
    for (unsigned j = 0; j < k && j < c_.size(); ++j)
      if (c_[j] != 0) return std::nullopt;
    TPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    for (auto& x : r.c_) x /= c;
    return r;
  }

  // "0", "4t", "2 + 3t^2", "(4/3)t", "1 - t".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Rat a = c_[k];
      if (first) {
        if (a < 0) out += "-", a = -a;
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      out += term_str(a, k);
      first = false;
    }
    return out;
  }

 private:
  static std::string term_str(const Rat& a, size_t k) {
    std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0) return rat_str(a);
    if (a == 1) return var;
    std::string cs = rat_str(a);
    if (!is_integer(a)) cs = "(" + cs + ")";
    return cs + var;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

}  // namespace peterson
