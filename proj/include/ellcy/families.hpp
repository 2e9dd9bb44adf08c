#pragma once
// The four one-parameter families of rational elliptic surfaces with a
// five-fiber configuration [n1, n2, n3, n4] + II generically, together with
// specialization at rational parameter values, the bookkeeping of their
// degenerate members, and cusp normalization to {0, 1, infinity}.

#include <optional>
#include <string>
#include <vector>

#include "ellcy/surface.hpp"

namespace ellcy {

enum class FamilyId { f1117, f1126, f1135, f1234 };

/// "1,1,1,7,II" and friends.
std::string family_label(FamilyId id);
std::optional<FamilyId> parse_family_label(const std::string& s);
std::vector<FamilyId> all_families();

/// A cusp whose position varies with the parameter: locus(t, m) = 0.
struct MovingCusp {
  BiPoly locus;  // outer variable t, inner variable m
  FiberType type;
};

struct FamilyModel {
  FamilyId id;
  std::string label;
  BiPoly a1, a2, a3, a4, a6;  // outer t, inner m
  std::vector<MovingCusp> moving;
  std::vector<std::pair<PValue, FiberType>> fixed;  // m-independent cusps
  /// Parameter values where two cusps collide, with the resulting
  /// configuration label.
  std::vector<std::pair<Rat, std::string>> degenerations;
};

const FamilyModel& family_model(FamilyId id);

/// Substitute the inner variable: f(t, m0) as a univariate polynomial.
PolyQ bipoly_at_m(const BiPoly& f, const Rat& m0);
/// Substitute the outer variable: f(t0, m) as a polynomial in m.
PolyQ bipoly_at_t(const BiPoly& f, const Rat& t0);

/// Sorted configuration label of an analysis: semistable orders ascending,
/// then additive types, e.g. "1,2,3,4,II".
std::string config_label(const SurfaceAnalysis& a);

struct DegenerationRecord {
  Rat m0;
  std::string config;  // label of the degenerate configuration
  int mw_rank = 0;
};

struct SpecializeResult {
  WeierstrassModel model;
  SurfaceAnalysis analysis;
  /// Present when cusps collided (fewer than five singular fibers).
  std::optional<DegenerationRecord> degeneration;
};

/// Member of the family at m = m0. Throws std::domain_error when the member
/// is not an elliptic surface (identically vanishing discriminant).
SpecializeResult specialize(FamilyId id, const Rat& m0);

/// The geometric singular points with explicit coordinates, one entry per
/// conjugate; throws when a place of degree >= 2 has no explicit root.
std::vector<std::pair<PValue, FiberType>> geometric_cusps(const SurfaceAnalysis& a);

/// Which cusp goes where when renormalizing a four-fiber surface.
struct AnchorSpec {
  PValue to_zero, to_one, to_infinity;
};

struct NormalizedCusps {
  MobiusMap mu;        // maps the chosen cusps to 0, 1, infinity
  QuadElem lambda;     // image of the remaining free cusp
  FiberType free_type; // its fiber type
};

/// Precondition (else std::domain_error): the analysis has exactly four
/// geometric singular fibers, exactly one of them II or III -- the one sent
/// to infinity -- and the rest semistable.
NormalizedCusps normalize_cusps(const SurfaceAnalysis& a, const AnchorSpec& spec);

}  // namespace ellcy
