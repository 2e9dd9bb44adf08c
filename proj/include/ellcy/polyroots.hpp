#pragma once
// Exact root extraction. Rational roots are found at any degree; degree <= 2
// remainders are solved by the quadratic formula over the squarefree core of
// the discriminant; quartics are additionally split into rational quadratic
// pairs via the resolvent cubic when possible. Whatever survives is returned
// as an opaque residual factor (certified irreducible for degrees 3 and 4,
// unproven beyond).

#include <vector>

#include "ellcy/poly.hpp"

namespace ellcy {

struct RootsResult {
  std::vector<QuadElem> roots;      // repeated per multiplicity
  std::vector<PolyQ> residual;      // monic factors of degree >= 3
};

/// Roots of a nonzero rational polynomial, reported as elements of Q or of a
/// quadratic field.
RootsResult poly_roots(const PolyQ& p);

/// Roots lying in the given ambient field Q(sqrt(ambient_d)) of a polynomial
/// with coefficients there. Residual factors keep their coefficients in the
/// ambient field.
struct RootsResultK {
  std::vector<QuadElem> roots;
  std::vector<PolyK> residual;
};
RootsResultK poly_roots_in_field(const PolyK& p, const Int& ambient_d);

/// Monic factorization of a squarefree rational polynomial into certified
/// irreducible pieces of degree <= 4 plus opaque higher-degree remainders.
std::vector<PolyQ> factor_squarefree_rational(const PolyQ& p);

}  // namespace ellcy
