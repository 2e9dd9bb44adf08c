#pragma once
// Fiber-by-fiber analysis of a rational elliptic surface given by an
// extended Weierstrass model over K(t): singular places, Kodaira types,
// Euler number, and Mordell-Weil rank via Shioda-Tate.

#include <cstdint>
#include <vector>

#include "ellcy/fppoly.hpp"
#include "ellcy/kodaira.hpp"
#include "ellcy/weier.hpp"

namespace ellcy {

/// A closed point of P^1 over the ambient field: t = infinity, or the root
/// locus of a monic polynomial. `value` carries an explicit root whenever the
/// degree is 1, or 2 with the root expressible in a quadratic field.
struct Place {
  bool at_infinity = false;
  PolyK minpoly;  // monic, degree >= 1; empty for infinity
  std::optional<QuadElem> value;
  int degree = 1;

  static Place infinity() {
    Place p;
    p.at_infinity = true;
    return p;
  }
  static Place finite(const QuadElem& v) {
    Place p;
    p.minpoly = PolyK({-v, QuadElem(1)});
    p.value = v;
    return p;
  }

  friend bool operator==(const Place& x, const Place& y) {
    if (x.at_infinity != y.at_infinity) return false;
    return x.at_infinity || x.minpoly == y.minpoly;
  }
};

std::string to_string(const Place& p);

struct KodairaFiber {
  Place place;
  FiberType type;
  int v_disc = 0;  // valuation of the minimal discriminant
  int components = 1;
};

struct SurfaceAnalysis {
  Int field_d{1};
  std::vector<KodairaFiber> fibers;  // singular fibers only
  int euler = 0;                     // sum of deg * v_disc; 12 for rational
  int mw_rank = 0;
  int singular_count = 0;   // #S, geometric (degree-weighted)
  int semistable_count = 0; // geometric count of I_n fibers, n >= 1
  int n2 = 0, n3 = 0, n4 = 0;  // geometric counts of II, III, IV
  bool has_starred = false;

  const KodairaFiber* fiber_at(const PValue& v) const;
};

/// Full analysis. Throws std::domain_error when the discriminant vanishes
/// identically (degenerate surface) or when the total discriminant degree is
/// not 12 (not a rational elliptic surface).
SurfaceAnalysis analyze_surface(const WeierstrassModel& m);

/// Independent single-place classification (direct valuation by repeated
/// division instead of the cluster pipeline); used to cross-check
/// analyze_surface.
FiberType kodaira_type_at(const WeierstrassModel& m, const Place& place);
FiberType kodaira_type_at(const WeierstrassModel& m, const PValue& at);

/// Convenience: transported analysis under t -> mu(t). The fiber over
/// mu(x) of the result matches the fiber over x of `a`'s model.
SurfaceAnalysis mobius_apply(const WeierstrassModel& m, const MobiusMap& mu);

/// Analysis-level action: moves each fiber's place to its image under mu,
/// leaving types untouched. Every finite place must carry an explicit root
/// value (degree <= 2); std::domain_error otherwise or when mu degenerates.
SurfaceAnalysis mobius_apply(const SurfaceAnalysis& a, const MobiusMap& mu);

/// The closed point of P^1 containing v: degree 1 when v lies in the
/// ambient field, degree 2 (conjugate pair) when v is properly quadratic
/// over it.
Place place_from_value(const QuadElem& v, const Int& ambient_d);

// ---- Reduction mod p ----------------------------------------------------

/// Raised when p stays prime in the coefficient field (no residue map to F_p).
struct InertPrimeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct FpModel {
  std::uint64_t p;
  FpPoly a1, a2, a3, a4, a6;
  std::uint64_t sqrt_d;  // the chosen image of sqrt(field_d); 0 over Q
};

/// Reduces the coefficients mod p (p > 3). sqrt(field_d) maps to the smaller
/// square root mod p; InertPrimeError if field_d is a non-residue,
/// std::domain_error if a coefficient denominator vanishes.
FpModel reduce_mod_p(const WeierstrassModel& m, std::uint64_t p);

struct FpFiber {
  bool at_infinity = false;
  FpPoly minpoly;  // monic irreducible over F_p
  int degree = 1;
  FiberType type;
  int v_disc = 0;
};

struct FpSurfaceAnalysis {
  std::uint64_t p = 0;
  std::vector<FpFiber> fibers;
  int euler = 0;
  int semistable_count = 0;
  bool has_starred = false;
};

/// Fiber analysis of the reduced surface (full factorization over F_p).
FpSurfaceAnalysis analyze_surface_fp(const FpModel& m);

}  // namespace ellcy
