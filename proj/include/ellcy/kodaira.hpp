#pragma once
// Kodaira fiber types and the valuation-based classification table for
// residue characteristic 0 or > 3 (tame case).

#include <optional>
#include <string>

namespace ellcy {

enum class KodairaClass {
  I0,      // smooth
  In,      // multiplicative, n >= 1
  II,
  III,
  IV,
  I0star,
  Instar,  // n >= 1
  IVstar,
  IIIstar,
  IIstar,
};

struct FiberType {
  KodairaClass cls = KodairaClass::I0;
  int n = 0;  // for In / Instar

  friend bool operator==(const FiberType&, const FiberType&) = default;
};

/// Number of irreducible components t(b) of the fiber.
int component_count(FiberType f);

/// Local Euler number; equals v(disc_min) in the tame case.
int euler_local(FiberType f);

bool is_semistable(FiberType f);  // I_n with n >= 1
bool is_starred(FiberType f);

std::string to_string(FiberType f);  // "I5", "II", "I2*", ...
FiberType parse_fiber_type(const std::string& s);

/// Classification from the valuations of (c4, c6, disc) of a *minimal* model
/// at the place; nullopt valuation encodes an identically-zero invariant.
/// Throws std::domain_error on an impossible triple.
FiberType classify_fiber(std::optional<int> vc4, std::optional<int> vc6, int vdisc);

/// Largest k with (4k, 6k, 12k) subtractable, i.e. the scaling that
/// minimalizes the model at the place; returns the adjusted valuations.
struct MinimalValuations {
  std::optional<int> vc4, vc6;
  int vdisc = 0;
  int scaling = 0;  // the k that was removed
};
MinimalValuations minimalize_valuations(std::optional<int> vc4, std::optional<int> vc6,
                                        int vdisc);

}  // namespace ellcy
