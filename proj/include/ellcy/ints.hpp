#pragma once
// Exact integer and rational scalars used throughout the library, plus a few
// small helpers the rest of the code wants in ADL scope.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ellcy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_zero(const Int& n) { return n.is_zero(); }
inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline Int ipow(Int base, unsigned e) {
  Int r{1};
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

inline Rat rpow(const Rat& base, int e) {
  if (e >= 0) return Rat(ipow(num(base), unsigned(e)), ipow(den(base), unsigned(e)));
  if (is_zero(base)) throw std::domain_error("rpow: zero to negative power");
  return Rat(ipow(den(base), unsigned(-e)), ipow(num(base), unsigned(-e)));
}

/// Exact division helpers; used generically by polynomial code over rings.
inline Rat exact_div(const Rat& a, const Rat& b) {
  if (is_zero(b)) throw std::domain_error("exact_div: division by zero");
  return a / b;
}

inline std::string to_string(const Int& n) { return n.str(); }

/// "num/den" with the "/den" omitted for integers.
inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace ellcy
