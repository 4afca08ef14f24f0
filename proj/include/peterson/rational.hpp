#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace peterson {

// All arithmetic in this library is exact. Scalars are arbitrary-precision
// rationals; intermediate counts (Weyl group orders, subword sums) are
// arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

// Quotient a/b, required to be exact.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  Int q = a / b;
  if (q * b != a) throw std::logic_error("exact_div: quotient is not integral");
  return q;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Canonical rendering: integers without denominator, otherwise "p/q".
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
}

}  // namespace peterson
