#pragma once
// Projective values over Q(sqrt(d)) and fractional-linear (Moebius)
// transformations acting on them.

#include <optional>
#include <vector>

#include "ellcy/quad.hpp"

namespace ellcy {

/// A point of P^1 over the ambient field: a finite value or infinity.
struct PValue {
  bool infinite = false;
  QuadElem v{};

  PValue() = default;
  PValue(const QuadElem& val) : v(val) {}  // NOLINT: implicit finite embed
  static PValue infinity() {
    PValue p;
    p.infinite = true;
    return p;
  }

  friend bool operator==(const PValue& x, const PValue& y) {
    if (x.infinite != y.infinite) return false;
    return x.infinite || x.v == y.v;
  }
  friend bool operator!=(const PValue& x, const PValue& y) { return !(x == y); }
};

std::string to_string(const PValue& p);

/// t -> (a t + b) / (c t + d), with ad - bc != 0.
struct MobiusMap {
  QuadElem a{1}, b{0}, c{0}, d{1};

  MobiusMap() = default;
  MobiusMap(QuadElem a_, QuadElem b_, QuadElem c_, QuadElem d_);

  static MobiusMap identity() { return MobiusMap(); }

  QuadElem determinant() const { return a * d - b * c; }
  MobiusMap inverse() const;
  /// (this o inner)(t) = this(inner(t)).
  MobiusMap compose(const MobiusMap& inner) const;
  PValue apply(const PValue& x) const;

  /// The unique map sending src[i] -> dst[i] for three pairwise distinct
  /// sources and destinations; nullopt when the points degenerate.
  static std::optional<MobiusMap> three_point(const std::vector<PValue>& src,
                                              const std::vector<PValue>& dst);
};

}  // namespace ellcy
