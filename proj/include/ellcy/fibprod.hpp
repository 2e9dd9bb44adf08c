#pragma once
// Fiber products of two rational elliptic surfaces with section: local
// product fibers and their small resolutions, global Calabi-Yau invariants
// (Euler number, Picard number, h^{1,2}), rigidity classification, and the
// nodal/degenerate prime bookkeeping of the reductions mod p.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellcy/surface.hpp"

namespace ellcy {

// ---- Local data ----------------------------------------------------------

enum class SmallResolution {
  exists,                 // crepant resolution with projective small model
  exists_nonprojective,   // small resolutions exist, in general only as
                          // complex manifolds (node smoothings obstruct
                          // projectivity globally)
  none,                   // no small resolution (mixed non-semistable pair)
};

std::string to_string(SmallResolution r);

/// Resolved product fiber above one base point, for a pair of Kodaira types.
/// Total on all type pairs: inadmissible combinations come back with
/// `admissible == false` and a reason instead of throwing.
struct LocalProduct {
  long long euler = 0;       // Euler contribution of the resolved fiber
  long long components = 1;  // irreducible components of the resolved fiber
  SmallResolution small_resolution = SmallResolution::exists;
  bool admissible = true;
  std::string note;  // set when inadmissible
};

LocalProduct local_product(FiberType left, FiberType right);

// ---- Global product ------------------------------------------------------

/// One base place of the product with the fiber types of both factors
/// (I_0 where a factor is smooth there).
struct FiberPair {
  Place place;
  int degree = 1;  // geometric points above the place
  FiberType left, right;
  int left_components = 1, right_components = 1;
  bool shared = false;  // both factors singular
  LocalProduct local;
};

/// The self-product correction term d: 1 exactly for the self-product of a
/// surface with four singular fibers, 0 otherwise; callers may override.
enum class DFlag { zero, one, automatic };

/// Rigidity patterns on the cusp sets (S, S', S''):
///   case1: S = S', #S = 4           case2: #S = #S' = 4, #S'' = 3
///   case3: {#S,#S'} = {4,5}, one contained in the other
///   case4: #S = #S' = 5, S = S'
/// each additionally requiring every unshared fiber to be I_1. A product is
/// rigid (h^{1,2} = 0) if and only if it matches one of the four patterns.
enum class RigidityCase { case1, case2, case3, case4, non_rigid };

std::string to_string(RigidityCase c);

struct FiberProductAnalysis {
  Int field_d{1};
  std::vector<FiberPair> pairs;  // all places of S + S', deterministic order
  int s_count = 0;               // #S   (degree-weighted)
  int s_prime_count = 0;         // #S'
  int shared_count = 0;          // #S''
  int n2 = 0, n3 = 0, n4 = 0;    // shared II / III / IV pairs
  int d_flag = 0;
  bool d_overridden = false;
  long long euler = 0;  // e of the resolved product
  long long rho = 0;    // Picard number
  long long h12 = 0;    // = rho - e/2, cross-checked against the
                        //   deformation count
  RigidityCase rigidity = RigidityCase::non_rigid;
};

/// Builds the resolved fiber product of two rational elliptic surfaces.
/// Requirements: reduced fibers on both factors, a common coefficient field,
/// and additive fibers shared with equal type on both sides. Violations
/// throw std::domain_error naming the offending place. The two independent
/// h^{1,2} computations (Picard vs deformation count) are asserted equal.
FiberProductAnalysis build_product(const SurfaceAnalysis& left,
                                   const SurfaceAnalysis& right,
                                   DFlag d = DFlag::automatic);

/// Pattern classification only (no h12 consistency check); build_product
/// runs this and cross-checks the result against h12 == 0.
RigidityCase classify_rigidity(const FiberProductAnalysis& a);

// ---- Primes of bad reduction --------------------------------------------

/// What happens to a fiber product when reduced at a prime p > 3.
enum class ReductionClass {
  merged_good,          // fibers merge compatibly with a small resolution
                        // (also the marker for primes of good reduction)
  extra_node,           // the two free cusps collide away from {0,1,oo}:
                        // the reduction gains an extra ordinary node
  factor_degeneration,  // a free cusp hits 0 or 1: one factor degenerates
                        // to a surface with fewer singular fibers
  no_small_resolution,  // a free cusp hits the additive fiber at infinity:
                        // the reduction has a fiber with no small resolution
  inert_skipped,        // quadratic cusps, p inert: no reduction to F_p
};

std::string to_string(ReductionClass c);

struct BadPrimeReport {
  std::vector<Int> nodal;       // descending
  std::vector<Int> degenerate;  // descending; disjoint from nodal
  std::map<Int, ReductionClass> per_prime;  // classification for p > 3
};

/// Bad primes of the product of two four-fiber surfaces with free cusps
/// lambda, lambda'. Degenerate primes divide a numerator or denominator of
/// one of N(lambda), N(lambda-1), N(lambda'), N(lambda'-1); nodal primes
/// divide the numerator of N(lambda - lambda') and are not degenerate.
/// Throws std::domain_error when lambda = lambda' or either lies in {0,1}.
BadPrimeReport bad_primes(const QuadElem& lambda, const QuadElem& lambda_prime);

/// The tracked quantities of the pairing of a four-fiber surface (free cusp
/// lambda) with the matched five-fiber member at m = -8 lambda, whose moving
/// cusps sit at lambda = -m/8 (I_2) and j = -4(m-1)^3 / (81(m+2)^2) (I_1).
struct FiveFiberQuantities {
  Rat m;
  Rat lambda, lambda_minus_1;  // the I_2 cusp relative to {0, 1}
  Rat j, j_minus_1, j_minus_lambda;  // the I_1 cusp relative to {0, 1, lambda}
};

FiveFiberQuantities five_fiber_quantities(const Rat& lambda);

/// Bad primes of the matched four-by-five pairing: degenerate primes divide
/// num/den of lambda, num of lambda-1, or den of j; nodal primes divide
/// num(j-1) and are not degenerate.
BadPrimeReport bad_primes_five_fiber(const Rat& lambda);

/// Context for classifying the reduction of a product at one prime: the free
/// cusps of the two factors, plus the five-fiber parameter when the left
/// factor is a matched five-fiber member (lambda then rational = -m/8).
struct ReductionContext {
  QuadElem lambda;
  QuadElem lambda_prime;
  std::optional<Rat> five_fiber_m;

  static ReductionContext four_fiber_pair(const QuadElem& l, const QuadElem& lp);
  static ReductionContext five_fiber_pair(const Rat& lambda);
};

/// Classifies the reduction at p > 3 (p <= 3 throws: wild ramification is
/// out of scope). Primes dividing none of the tracked quantities come back
/// as the trivial `merged_good` marker.
ReductionClass classify_reduction_at(const ReductionContext& ctx, std::uint64_t p);

// ---- Merging rule --------------------------------------------------------

/// Fiber types above two base places that collide under reduction mod p;
/// `first_*` / `second_*` are the (left factor, right factor) types there.
/// On one factor the two colliding fibers merge I_a + I_b -> additive
/// (I_1 + I_2 -> III, I_1 + I_3 -> IV); the other factor is the passive one.
struct MergingPattern {
  FiberType first_left, first_right;
  FiberType second_left, second_right;
};

enum class MergingOutcome {
  good,  // small resolution survives the merge
  bad,   // a passive-factor node lands on the wrong merged component
};

std::string to_string(MergingOutcome o);

/// Decides whether the merged reduction still carries a small resolution:
/// good exactly when every singular fiber of the passive factor sits over
/// the place where the merging factor has its larger fiber. Unrecognized
/// patterns throw std::domain_error.
MergingOutcome merging_rule(const MergingPattern& pattern);

}  // namespace ellcy
