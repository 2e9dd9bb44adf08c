#pragma once
// Recovering family parameters from a prescribed cusp position. Given a
// position lambda (in Q or a quadratic field), find every parameter value m
// for which the family member carries a moving cusp at lambda -- either in
// the family's own coordinates or in one of the natural renormalized frames
// (anchoring frames with constant cusps, and cusp-ratio frames where two
// moving cusps sit in ratio lambda). This is the link between a four-fiber
// surface with free cusp lambda and the five-fiber members pairing with it.
//
// Solutions come in three shapes:
//   - explicit values (degree <= 2 over Q), as QuadElem;
//   - minimal polynomials for higher-degree solutions (certified irreducible
//     through degree 4, opaque beyond);
//   - residues mod p, when solving over a prime field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellcy/families.hpp"

namespace ellcy {

struct MatchSolution {
  std::optional<QuadElem> value;        // explicit parameter value
  std::optional<PolyQ> min_poly;        // monic vanishing polynomial, deg >= 3
  std::optional<std::uint64_t> residue; // class mod p (mod-p mode only)
  std::uint64_t modulus = 0;            // 0 in exact mode
  std::string branch;                   // which cusp/frame produced it
};

struct MatchMode {
  bool exact = true;
  std::uint64_t p = 0;

  static MatchMode exact_mode() { return MatchMode{}; }
  static MatchMode mod_p(std::uint64_t p);
};

/// All parameter solutions for the given family and cusp position.
/// Preconditions (std::domain_error): lambda differs from 0 and 1; in mod-p
/// mode additionally p > 3, lambda is a p-adic unit and stays away from
/// {0, 1} mod p. A quadratic lambda whose field is inert at p raises
/// InertPrimeError. Branches whose condition degenerates mod p are skipped.
std::vector<MatchSolution> match_parameter(FamilyId id, const QuadElem& lambda,
                                           const MatchMode& mode);

/// The cusp-ratio condition for the family with three moving I1 cusps
/// ([1,1,1,7] + II): the returned monic polynomial F(m) vanishes exactly when
/// the member at m has two I1 cusps t0 and lambda*t0. Spurious factors of the
/// raw resultant are removed: coincidences at t = 0 by the stabilized gcd
/// with the t = 0 locus value, and the formal collapse where both outer
/// degrees drop (the Sylvester determinant vanishes identically there);
/// genuine ratio solutions at the collapse locus are checked directly and
/// restored. Throws std::domain_error for lambda in {0, 1}.
PolyK resultant_condition(const QuadElem& lambda);

}  // namespace ellcy
