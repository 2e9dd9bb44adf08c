#pragma once
// Elements a + b*sqrt(d) of Q or of a quadratic field Q(sqrt(d)), d a
// squarefree integer. d == 1 is the marker for "plain rational" (b == 0).
// Arithmetic never silently mixes two genuinely different fields.

#include <iosfwd>
#include <optional>
#include <utility>

#include "ellcy/ints.hpp"

namespace ellcy {

/// r = s^2 * d0 with d0 a squarefree integer (sign carried by d0).
/// r == 0 gives (0, 1).
std::pair<Rat, Int> rat_sqrt_decompose(const Rat& r);

/// Exact rational square root, if any.
std::optional<Rat> rat_sqrt(const Rat& r);

struct QuadElem {
  Rat a{0};
  Rat b{0};
  Int d{1};

  QuadElem() = default;
  QuadElem(const Rat& r) : a(r) {}  // NOLINT: implicit by design (Q embeds)
  QuadElem(int v) : a(v) {}         // NOLINT
  QuadElem(const Rat& a_, const Rat& b_, const Int& d_);

  bool is_rational() const { return d == 1; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  QuadElem operator-() const { return QuadElem(-a, -b, d); }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a == y.a && x.b == y.b && x.d == y.d;
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }
};

inline bool is_zero(const QuadElem& x) { return x.is_zero(); }

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);
inline QuadElem& operator+=(QuadElem& x, const QuadElem& y) { return x = x + y; }
inline QuadElem& operator-=(QuadElem& x, const QuadElem& y) { return x = x - y; }
inline QuadElem& operator*=(QuadElem& x, const QuadElem& y) { return x = x * y; }
inline QuadElem& operator/=(QuadElem& x, const QuadElem& y) { return x = x / y; }

QuadElem conj(const QuadElem& x);

/// Norm down to Q: a^2 - d b^2. For rational inputs this is the square.
Rat field_norm(const QuadElem& x);

QuadElem inverse(const QuadElem& x);

inline QuadElem exact_div(const QuadElem& x, const QuadElem& y) { return x / y; }

/// Square root inside the same field Q(sqrt(d)) if one exists there.
std::optional<QuadElem> quad_sqrt(const QuadElem& x);

/// The rational value if d == 1, otherwise nullopt.
std::optional<Rat> as_rational(const QuadElem& x);

/// Canonical spelling: "num/den" for rationals, "(A+B*sqrt(D))/C" otherwise,
/// with C the common denominator (the "/C" omitted when C == 1).
std::string to_string(const QuadElem& x);

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace ellcy
