#pragma once
// Anchored presentations of the four-fiber surfaces that arise as family
// degenerations: cusps at 0, 1, infinity plus one free cusp lambda, with the
// additive fiber (II or III) at infinity. Constructed once from family
// members by Moebius transport and fully re-verified by the analyzer.

#include "ellcy/families.hpp"

namespace ellcy {

struct BuiltinSurface {
  KodairaClass additive;  // II or III, at infinity
  QuadElem lambda;        // position of the free cusp
  FiberType type_at_zero, type_at_one, type_at_lambda;
  std::string config;     // e.g. "2,3,5,II"
  WeierstrassModel model;
  SurfaceAnalysis analysis;
  FamilyId origin_family;
  Rat origin_m;
  MobiusMap frame;  // family coordinates -> anchored coordinates
};

const std::vector<BuiltinSurface>& builtin_surfaces();

/// Lookup by additive type at infinity and free-cusp position; null when no
/// presentation with that lambda exists.
const BuiltinSurface* find_builtin(KodairaClass additive, const QuadElem& lambda);

}  // namespace ellcy
