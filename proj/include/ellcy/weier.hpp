#pragma once
// Extended Weierstrass models over K(t), K = Q or a quadratic field, and the
// elementary transformations the analysis needs: b/c-invariants, quadratic
// twists, Moebius substitutions in the base parameter, and the chart at
// t = infinity.

#include <array>
#include <optional>

#include "ellcy/mobius.hpp"
#include "ellcy/poly.hpp"

namespace ellcy {

struct WeierstrassModel {
  Int field_d{1};  // coefficients live in Q(sqrt(field_d)); 1 means Q
  PolyK a1, a2, a3, a4, a6;
  std::optional<Rat> parameter;  // provenance passthrough (family parameter)
};

struct CInvariants {
  PolyK b2, b4, b6, b8, c4, c6, disc;
};

/// b- and c-invariants plus the discriminant; the standard identities
/// 4 b8 = b2 b6 - b4^2 and 1728 disc = c4^3 - c6^2 hold by construction.
CInvariants c_invariants(const WeierstrassModel& m);

/// Quadratic twist by a nonzero g in K(t) (given as num/den). The twist is
/// applied to the short form (A, B) -> (g^2 A, g^3 B) using the squarefree
/// kernel of g; fiber types are recomputed downstream, never table-flipped.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const PolyK& g_num,
                                 const PolyK& g_den);

/// Substitutes t -> mu(t) and clears denominators with admissible weights, so
/// the fiber of the result at t0 is the fiber of m at mu(t0).
WeierstrassModel mobius_transport(const WeierstrassModel& m, const MobiusMap& mu);

/// Weight used for the chart at infinity: max_i ceil(deg a_i / i).
int infinity_weight(const WeierstrassModel& m);

/// The model in the coordinate s = 1/t (fiber at s = 0 is the fiber at
/// t = infinity).
WeierstrassModel model_at_infinity(const WeierstrassModel& m);

}  // namespace ellcy
